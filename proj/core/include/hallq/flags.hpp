#pragma once

#include "hallq/fq.hpp"
#include "hallq/hn_recursion.hpp"
#include "hallq/motivic.hpp"

namespace hallq {

/// Type of a filtration on a fixed r-dimensional space, listed DEEP-FIRST:
/// delta[0] is the dimension of the deepest graded piece and theta[0] its
/// weight. The filtration is the chain U_1 <= U_2 <= ... <= U_n = V with
/// dim U_i = delta[0] + ... + delta[i-1].
struct FlagType {
    int r = 0;
    std::vector<int> delta;
    std::vector<long> theta;

    int steps() const { return static_cast<int>(delta.size()); }
    void validate() const {
        if (delta.empty()) throw ValidationError("flag type: empty composition");
        int sum = 0;
        for (int d : delta) {
            if (d <= 0) throw ValidationError("flag type: delta entries must be positive");
            sum += d;
        }
        if (sum != r) throw ValidationError("flag type: delta must sum to r");
        if (!theta.empty() && theta.size() != delta.size())
            throw ValidationError("flag type: theta length mismatch");
    }
    /// Degree weights must not increase towards shallower steps, otherwise
    /// deg_theta is not a degree function (monotone under pseudo-isos) and
    /// the HN formalism does not apply.
    bool theta_in_degree_cone() const {
        for (size_t i = 0; i + 1 < theta.size(); ++i)
            if (theta[i] < theta[i + 1]) return false;
        return true;
    }
};

/// A flag of the given type in F_q^r: column bases of U_1 <= ... <= U_{n-1}
/// (U_n = V is implicit).
struct FqFlag {
    std::vector<FqMat> bases;
};

/// All flags of the given type in F_q^r.
std::vector<FqFlag> enumerate_flags(const FlagType& ft, int q, Budget& budget);

/// Graded dimension vector (deep-first) induced on a subspace W.
DimVec induced_graded_dims(const FlagType& ft, const FqFlag& flag, const FqMat& w, int q);

/// Semistability of the filtered space (F_q^r, flag) with respect to
/// deg_theta; subobjects are all rational subspaces with their induced
/// filtrations.
bool flag_is_semistable(const FlagType& ft, const FqFlag& flag, int q, Budget& budget);

/// Groupoid class of flags of type delta in F_q^r with parabolic
/// automorphisms: gaussian_multinomial(r, delta) / #P_delta where
/// #P_delta = L^{sum_{i<j} d_i d_j} prod_i [GL_{d_i}].
MotivicScalar flag_groupoid_class(const FlagType& ft);

/// Brute-force count of flags of type delta in F_q^r (for the flag-variety
/// formula checks).
Int count_flags_bruteforce(const FlagType& ft, int q, Budget& budget);

/// chi_op of the category of [n]-step filtered spaces on graded classes,
/// deep-first coordinates: chi_op(x, y) = sum_{i <= j} x_i y_j.
std::vector<std::vector<long>> fil_chi_op(int steps);

/// Slope context of filtered F_q-spaces graded by deep-first class vectors:
/// total class of beta is 1 / #P_beta. Requires theta in the degree cone.
SlopeLatticeContext fil_slope_context(const FlagType& ft);
/// Same over F_1 (pointed sets): total class 1 / prod beta_a!, untwisted.
SlopeLatticeContext fil_slope_context_f1(const FlagType& ft);

enum class PeriodField { Fq, F1 };
enum class PeriodMode { bruteforce, recursion };

struct PeriodDomainResult {
    PeriodField field;
    PeriodMode mode;
    /// recursion mode: counting polynomial in t (F_q) or constant (F_1)
    IntPoly polynomial;
    /// count at the requested field: polynomial at t=q resp. t=1 for the
    /// recursion, direct count for brute force
    Rational count;
};

/// Number of semistable flags of type delta on the fixed rational space:
/// F_q^r with subobjects the rational subspaces, or the pointed r-set with
/// subobjects its subsets. Brute force enumerates and tests; recursion
/// resolves the HN identity (and is only defined for theta in the degree
/// cone). Both modes agree after specializing t -> q resp. t -> 1.
PeriodDomainResult period_domain_count(const FlagType& ft, PeriodField field, PeriodMode mode,
                                       int q, Budget& budget);

/// Subset flags of type delta on {0,...,r-1}, encoded as level maps
/// (element -> step index, deep = 0).
std::vector<std::vector<int>> enumerate_subset_flags(const FlagType& ft, Budget& budget);
bool subset_flag_is_semistable(const FlagType& ft, const std::vector<int>& levels);

}  // namespace hallq
