#include "hallq/hn_recursion.hpp"

#include "hallq/integration.hpp"

namespace hallq {

MotivicScalar SemistableSolver::semistable_class(const DimVec& alpha, SsMethod method) {
    require_effective(alpha);
    if (dim_is_zero(alpha)) return MotivicScalar(1);
    if (method == SsMethod::recursive) {
        auto it = memo_recursive_.find(alpha);
        if (it != memo_recursive_.end()) return it->second;
        MotivicScalar acc = ctx_.total_class(alpha);
        for (auto& tau : hn_types(alpha, ctx_.stability)) {
            if (tau.size() <= 1) continue;  // the one-step type is [ssM_alpha] itself
            MotivicScalar prod = ctx_.tuple_twist(tau);
            for (auto& t : tau) prod *= semistable_class(t, SsMethod::recursive);
            acc -= prod;
        }
        memo_recursive_.emplace(alpha, acc);
        return acc;
    }
    // Reineke inversion
    MotivicScalar acc(0);
    for (auto& tau : inversion_tuples(alpha, ctx_.stability)) {
        MotivicScalar prod = ctx_.tuple_twist(tau);
        for (auto& t : tau) prod *= ctx_.total_class(t);
        if (tau.size() % 2 == 0) prod = -prod;
        acc += prod;
    }
    return acc;
}

MotivicScalar SemistableSolver::semistable_class_checked(const DimVec& alpha) {
    MotivicScalar rec = semistable_class(alpha, SsMethod::recursive);
    MotivicScalar inv = semistable_class(alpha, SsMethod::inversion);
    if (rec != inv)
        throw ConsistencyError("semistable class: recursion and inversion disagree at " +
                               dim_to_string(alpha) + ": " + rec.to_string() + " vs " +
                               inv.to_string());
    return rec;
}

SlopeLatticeContext quiver_slope_context(const Quiver& Q, const StabilityData& s) {
    Q.validate();
    if (static_cast<int>(s.theta.size()) != Q.num_vertices())
        throw ValidationError("stability data does not match quiver");
    SlopeLatticeContext ctx;
    ctx.stability = s;
    int n = Q.num_vertices();
    ctx.chi_op.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) ctx.chi_op[i][i] = 1;
    for (auto& [src, tgt] : Q.arrows) ctx.chi_op[tgt][src] -= 1;  // chi_op(x,y) = psi(y,x)
    ctx.total_class = [Q](const DimVec& a) { return motivic_class_total(Q, a); };
    ctx.twisted = true;
    return ctx;
}

Rational count_semistable_bruteforce(const QuiverRepContext& ctx, const DimVec& alpha,
                                     const StabilityData& s) {
    Rational acc = 0;
    for (auto& cls : ctx.iso_classes(alpha))
        if (is_semistable(ctx, cls.rep, s)) acc += Rational(1) / Rational(cls.aut_order);
    return acc;
}

HNStratification hn_stratification(const QuiverRepContext& ctx, const DimVec& alpha,
                                   const StabilityData& s) {
    HNStratification out;
    std::map<std::vector<DimVec>, Rational> strata;
    Rational total = 0;
    for (auto& cls : ctx.iso_classes(alpha)) {
        Rational w = Rational(1) / Rational(cls.aut_order);
        total += w;
        strata[hn_filtration(ctx, cls.rep, s).type()] += w;
    }
    Rational sum = 0;
    for (auto& [type, cnt] : strata) {
        out.strata.push_back(HNStratumRow{type, cnt});
        sum += cnt;
    }
    out.total = total;
    out.partition_ok = (sum == total);
    return out;
}

}  // namespace hallq
