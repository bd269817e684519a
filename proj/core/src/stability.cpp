#include "hallq/stability.hpp"

#include <algorithm>

namespace hallq {

long StabilityData::deg(const DimVec& a) const {
    if (a.size() != theta.size()) throw ValidationError("stability: dim length mismatch");
    long d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += theta[i] * a[i];
    return d;
}

long StabilityData::rk(const DimVec& a) const {
    long r = 0;
    for (size_t i = 0; i < a.size(); ++i) r += rank_weights[i] * a[i];
    return r;
}

Slope slope_of(const DimVec& alpha, const StabilityData& s) {
    if (dim_is_zero(alpha)) throw ValidationError("slope_of: zero class has no slope");
    long r = s.rk(alpha);
    if (r == 0) return Slope::infinity();  // rank-zero torsion: explicit top element
    return Slope{false, Rational(s.deg(alpha), r)};
}

bool is_semistable(const QuiverRepContext& ctx, const QuiverRep& E, const StabilityData& s) {
    if (E.is_zero_object()) return true;
    Slope mu = slope_of(E.dim, s);
    for (auto& sq : ctx.subobjects(E)) {
        if (sq.sub.is_zero_object() || sq.quot.is_zero_object()) continue;
        if (slope_of(sq.sub.dim, s) > mu) return false;
    }
    return true;
}

HNFiltration hn_filtration(const QuiverRepContext& ctx, const QuiverRep& E,
                           const StabilityData& s) {
    HNFiltration out;
    if (E.is_zero_object()) return out;

    QuiverRep cur = E;          // current quotient E / F_k
    DimVec consumed(E.dim.size(), 0);
    std::optional<Slope> prev;
    while (!cur.is_zero_object()) {
        // maximal destabilizing subobject of cur: maximal slope, then
        // maximal rank; must be unique as a subobject
        auto subs = ctx.subobjects(cur);
        const QuiverRepContext::SubQuot* best = nullptr;
        Slope best_slope;
        long best_rank = -1;
        int attained = 0;
        for (auto& sq : subs) {
            if (sq.sub.is_zero_object()) continue;
            Slope sl = slope_of(sq.sub.dim, s);
            long rk = s.rk(sq.sub.dim);
            if (!best || sl > best_slope || (sl == best_slope && rk > best_rank)) {
                best = &sq;
                best_slope = sl;
                best_rank = rk;
                attained = 1;
            } else if (sl == best_slope && rk == best_rank) {
                ++attained;
            }
        }
        if (!best) throw ConsistencyError("hn_filtration: no subobject found");
        if (attained != 1)
            throw ConsistencyError("hn_filtration: maximal destabilizing subobject not unique (" +
                                   std::to_string(attained) + " candidates)");
        if (prev && !(best_slope < *prev))
            throw ConsistencyError("hn_filtration: slopes not strictly decreasing");
        if (!is_semistable(ctx, best->sub, s))
            throw ConsistencyError("hn_filtration: chosen step is not semistable");
        prev = best_slope;
        consumed = dim_sum(consumed, best->sub.dim);
        out.flag_dims.push_back(consumed);
        out.steps.push_back(HNStep{best->sub.dim, best->sub, best_slope});
        cur = best->quot;
    }
    return out;
}

namespace {

void hn_types_rec(const DimVec& remaining, std::optional<Slope> prev, const StabilityData& s,
                  std::vector<DimVec>& acc, std::vector<std::vector<DimVec>>& out) {
    if (dim_is_zero(remaining)) {
        out.push_back(acc);
        return;
    }
    for (auto& step : effective_vectors_below(remaining)) {
        Slope sl = slope_of(step, s);
        if (prev && !(sl < *prev)) continue;
        acc.push_back(step);
        hn_types_rec(dim_diff(remaining, step), sl, s, acc, out);
        acc.pop_back();
    }
}

void inversion_rec(const DimVec& alpha, const DimVec& done, const Slope& mu,
                   const StabilityData& s, std::vector<DimVec>& acc,
                   std::vector<std::vector<DimVec>>& out) {
    DimVec remaining = dim_diff(alpha, done);
    if (dim_is_zero(remaining)) {
        out.push_back(acc);
        return;
    }
    for (auto& step : effective_vectors_below(remaining)) {
        DimVec next = dim_sum(done, step);
        // partial sums must have slope strictly above mu(alpha), except the
        // full sum
        if (next != alpha && !(slope_of(next, s) > mu)) continue;
        acc.push_back(step);
        inversion_rec(alpha, next, mu, s, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<std::vector<DimVec>> hn_types(const DimVec& alpha, const StabilityData& s) {
    require_effective(alpha);
    if (dim_is_zero(alpha)) return {{}};
    std::vector<std::vector<DimVec>> out;
    std::vector<DimVec> acc;
    hn_types_rec(alpha, std::nullopt, s, acc, out);
    return out;
}

std::vector<std::vector<DimVec>> inversion_tuples(const DimVec& alpha, const StabilityData& s) {
    require_effective(alpha);
    if (dim_is_zero(alpha)) return {{}};
    std::vector<std::vector<DimVec>> out;
    std::vector<DimVec> acc;
    inversion_rec(alpha, DimVec(alpha.size(), 0), slope_of(alpha, s), s, acc, out);
    return out;
}

}  // namespace hallq
