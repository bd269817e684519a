#pragma once

#include "hallq/group_model.hpp"
#include "hallq/motivic.hpp"

namespace hallq {

/// Class function on a finite group with values in the t-rational-function
/// ring (MotivicScalar in the variable t). Virtual characters and their
/// Tate-twisted combinations live here.
class ClassFunction {
  public:
    ClassFunction(std::shared_ptr<const FiniteGroupModel> g, std::vector<MotivicScalar> values)
        : g_(std::move(g)), v_(std::move(values)) {
        if (static_cast<int>(v_.size()) != g_->num_classes())
            throw ValidationError("class function: one value per conjugacy class required");
    }

    static ClassFunction constant(std::shared_ptr<const FiniteGroupModel> g,
                                  const MotivicScalar& c) {
        std::vector<MotivicScalar> v(g->num_classes(), c);
        return ClassFunction(std::move(g), std::move(v));
    }
    static ClassFunction trivial(std::shared_ptr<const FiniteGroupModel> g) {
        return constant(std::move(g), MotivicScalar(1));
    }
    static ClassFunction zero(std::shared_ptr<const FiniteGroupModel> g) {
        return constant(std::move(g), MotivicScalar(0));
    }
    /// Irreducible character chi^lambda of a symmetric-group model.
    static ClassFunction sym_irreducible(std::shared_ptr<const FiniteGroupModel> g,
                                         const Partition& lambda);

    const std::shared_ptr<const FiniteGroupModel>& group() const { return g_; }
    const std::vector<MotivicScalar>& values() const { return v_; }
    const MotivicScalar& at_class(int c) const { return v_[c]; }
    MotivicScalar at_element(int e) const { return v_[g_->class_of(e)]; }
    MotivicScalar at_identity() const { return v_[g_->identity_class()]; }

    ClassFunction operator+(const ClassFunction& o) const;
    ClassFunction operator-(const ClassFunction& o) const;
    /// Pointwise product.
    ClassFunction operator*(const ClassFunction& o) const;
    ClassFunction times(const MotivicScalar& s) const;
    bool operator==(const ClassFunction& o) const { return g_ == o.g_ && v_ == o.v_; }

    /// Value at the identity with t = t0 (dimension of a virtual character).
    Rational dimension_at(const Rational& t0) const;

    /// Class-weighted inner product (1/|G|) sum_g f(g) h(g); exact, no
    /// conjugation (all characters used here are rational-valued).
    MotivicScalar inner(const ClassFunction& o) const;

    /// Multiplicities against the irreducible characters of a symmetric
    /// group model, one scalar per partition (in partitions_of(r) order).
    /// For virtual characters with t-values the multiplicities live in the
    /// t-fraction ring.
    std::vector<MotivicScalar> decompose_symmetric() const;

  private:
    std::shared_ptr<const FiniteGroupModel> g_;
    std::vector<MotivicScalar> v_;
};

/// Standard induced class function from a subgroup given by its sorted
/// member list: (Ind f)(g) = (1/|H|) sum_{x in G : x^-1 g x in H} f(x^-1 g x).
/// f_on_h gives the value of f at a subgroup element (by its id in G).
ClassFunction induce(const std::shared_ptr<const FiniteGroupModel>& g,
                     const std::vector<int>& subgroup_members,
                     const std::function<MotivicScalar(int)>& f_on_h);

/// Induction of a class function living on another model via an embedding of
/// element ids.
ClassFunction induce(const std::shared_ptr<const FiniteGroupModel>& g,
                     const std::vector<int>& subgroup_members,
                     const std::vector<int>& embed_of_sub_elem, const ClassFunction& f);

/// Restriction along a member list (values transported classwise).
std::function<MotivicScalar(int)> restrict_to(const ClassFunction& f);

/// External product on the product group model: value at (c1, c2) is
/// f(c1) g(c2).
ClassFunction external_product(const ClassFunction& f, const ClassFunction& g);

/// Combinatorial induction from a Young subgroup S_eta of S_r: the value at
/// the class mu is sum over splittings of mu into cycle types per block of
/// prod f_i(mu_i) * z_mu / prod z_{mu_i}. Independent route used to
/// cross-check the generic coset formula.
std::vector<MotivicScalar> induce_young_cycle_types(
    int r, const std::vector<int>& eta,
    const std::vector<std::function<MotivicScalar(const Partition&)>>& block_values);

}  // namespace hallq
