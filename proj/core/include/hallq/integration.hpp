#pragma once

#include <string>
#include <vector>

#include "hallq/hall.hpp"
#include "hallq/twisted_series.hpp"

namespace hallq {

/// Motivic class of the moduli stack of representations of dimension alpha:
/// [V_{Q,alpha} / GL_alpha] = L^{sum_e a_{s(e)} a_{t(e)}} / prod_i [GL_{a_i}].
MotivicScalar motivic_class_total(const Quiver& Q, const DimVec& alpha);

/// Reineke's counting integration map: sends 1_A to [dim A] / #Aut(A), i.e.
/// the coefficient of the result at alpha is
///   sum_{[A] : dim A = alpha} phi(A) / #Aut(A).
/// Values land in the twisted group ring with zeta = q^{-1} and chi_op from
/// the quiver Euler form.
CountingSeries integrate_counting(const HallElement& phi, int trunc);

struct CheckRow {
    std::string label;
    std::string lhs, rhs;
    bool pass;
};

struct CheckReport {
    std::string identity;  // the verified identity, e.g. "integration morphism"
    std::vector<CheckRow> rows;
    bool all_pass = true;

    void add(std::string label, std::string lhs, std::string rhs, bool pass) {
        all_pass = all_pass && pass;
        rows.push_back(CheckRow{std::move(label), std::move(lhs), std::move(rhs), pass});
    }
};

/// Verifies that the integration map is an algebra morphism:
/// integrate(1_A * 1_B) = integrate(1_A) . integrate(1_B) in the twisted
/// ring, for all pairs of basis classes with total dimension <= bound.
/// Both sides are computed by independent routes (subobject enumeration vs
/// automorphism orders plus the Euler-form twist).
CheckReport verify_integration_morphism(const QuiverRepContext& ctx, int bound);

/// Counting shadow of the Riedtmann fibre formula: with A the subobject
/// class and B the quotient class,
///   sum_{[E]} g^E_{A,B} / #Aut(E)
///     = q^{ext1(B,A) - hom(B,A)} / (#Aut(A) #Aut(B)),
/// where g^E_{A,B} counts subobjects of E isomorphic to A with quotient
/// isomorphic to B.
CheckReport riedtmann_fibre_check(const QuiverRepContext& ctx, const QuiverRep& A,
                                  const QuiverRep& B);

/// Hall associativity (a*b)*c = a*(b*c) on all basis triples with total
/// dimension <= bound.
CheckReport verify_hall_associativity(const QuiverRepContext& ctx, int bound);

}  // namespace hallq
