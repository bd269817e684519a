#pragma once

#include <map>

#include "hallq/motivic.hpp"
#include "hallq/stability.hpp"

namespace hallq {

/// A graded slope context: everything the Harder-Narasimhan recursion needs
/// to know about a family of moduli classes indexed by effective vectors.
/// Instances: quiver representation moduli (classes in Z^{Q_0}) and filtered
/// spaces of a fixed flag type (classes in Z^{steps}).
struct SlopeLatticeContext {
    StabilityData stability;
    /// chi_op(x, y) as an explicit matrix.
    std::vector<std::vector<long>> chi_op;
    /// [M_alpha]: motivic class of the full moduli of objects of class alpha.
    std::function<MotivicScalar(const DimVec&)> total_class;
    /// True when the twist L^{-chi_op} applies (F_q models); false for the
    /// untwisted F_1 model.
    bool twisted = true;

    long chi_op_eval(const DimVec& x, const DimVec& y) const {
        long r = 0;
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = 0; j < y.size(); ++j) r += x[i] * chi_op[i][j] * y[j];
        return r;
    }
    /// Twist of an ordered tuple: L^{- sum_{i<j} chi_op(tau_i, tau_j)},
    /// sub-class first.
    MotivicScalar tuple_twist(const std::vector<DimVec>& tau) const {
        if (!twisted) return MotivicScalar(1);
        long e = 0;
        for (size_t i = 0; i < tau.size(); ++i)
            for (size_t j = i + 1; j < tau.size(); ++j) e += chi_op_eval(tau[i], tau[j]);
        return MotivicScalar::lefschetz_pow(static_cast<int>(-e));
    }
};

enum class SsMethod { recursive, inversion };

/// Motivic class of the semistable locus.
///   recursive: [ssM_a] = [M_a] - sum_{proper HN types tau}
///                L^{-sum_{i<j} chi_op(tau_i,tau_j)} prod_k [ssM_{tau_k}],
///   inversion: [ssM_a] = sum_{tau |> a} (-1)^{m-1}
///                L^{-sum_{i<j} chi_op(tau_i,tau_j)} prod_k [M_{tau_k}],
/// where tau |> a ranges over tuples with partial-sum slopes above mu(a).
/// Memoized per solver instance; the cache is idempotent.
class SemistableSolver {
  public:
    explicit SemistableSolver(SlopeLatticeContext ctx) : ctx_(std::move(ctx)) {}

    MotivicScalar semistable_class(const DimVec& alpha, SsMethod method);
    /// Computes by both methods and checks agreement; disagreement is a
    /// consistency error (must not occur).
    MotivicScalar semistable_class_checked(const DimVec& alpha);

    const SlopeLatticeContext& ctx() const { return ctx_; }

  private:
    SlopeLatticeContext ctx_;
    std::map<DimVec, MotivicScalar> memo_recursive_;
};

/// Slope context of the quiver moduli [M_alpha] = [V_{Q,alpha}/GL_alpha].
SlopeLatticeContext quiver_slope_context(const Quiver& Q, const StabilityData& s);

/// sum over semistable iso classes of 1/#Aut, by exhaustive enumeration.
Rational count_semistable_bruteforce(const QuiverRepContext& ctx, const DimVec& alpha,
                                     const StabilityData& s);

/// Counting-level HN partition identity: stratum counts from hn_filtration
/// classification must sum to the total groupoid count, and each stratum
/// must match the twisted product of semistable counts of its type.
struct HNStratumRow {
    std::vector<DimVec> type;
    Rational count;
};
struct HNStratification {
    std::vector<HNStratumRow> strata;
    Rational total;
    bool partition_ok;  // sum of strata == total
};
HNStratification hn_stratification(const QuiverRepContext& ctx, const DimVec& alpha,
                                   const StabilityData& s);

}  // namespace hallq
