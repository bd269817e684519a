#include "hallq/flags.hpp"

#include <algorithm>

namespace hallq {

namespace {

// flags refining W: chains of subspaces of F_q^r with prescribed dims
void enumerate_chains(const FlagType& ft, int q, Budget& budget, std::vector<FqMat>& acc,
                      std::vector<FqFlag>& out) {
    int step = static_cast<int>(acc.size());
    if (step == ft.steps() - 1) {  // U_n = V implicit
        out.push_back(FqFlag{acc});
        return;
    }
    int dim_here = 0;
    for (int i = 0; i <= step; ++i) dim_here += ft.delta[i];
    for (auto& w : subspaces(ft.r, dim_here, q, budget)) {
        if (step > 0 && !subspace_contained(acc.back(), w, q)) continue;
        acc.push_back(w);
        enumerate_chains(ft, q, budget, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<FqFlag> enumerate_flags(const FlagType& ft, int q, Budget& budget) {
    ft.validate();
    require_prime_field(q);
    std::vector<FqFlag> out;
    std::vector<FqMat> acc;
    if (ft.steps() == 1) {
        out.push_back(FqFlag{});
        return out;
    }
    enumerate_chains(ft, q, budget, acc, out);
    return out;
}

DimVec induced_graded_dims(const FlagType& ft, const FqFlag& flag, const FqMat& w, int q) {
    int n = ft.steps();
    DimVec gr(n);
    int prev = 0;
    for (int i = 0; i < n; ++i) {
        int di;
        if (i == n - 1) {
            di = w.cols;  // W cap V = W
        } else {
            // dim(W cap U_{i+1}) = dim W + dim U - rank [W | U]
            int ru = flag.bases[i].cols;
            di = w.cols + ru - mat_rank(mat_hcat(w, flag.bases[i]), q);
        }
        gr[i] = di - prev;
        prev = di;
    }
    return gr;
}

bool flag_is_semistable(const FlagType& ft, const FqFlag& flag, int q, Budget& budget) {
    StabilityData s(ft.theta);
    DimVec total(ft.steps());
    for (int i = 0; i < ft.steps(); ++i) total[i] = ft.delta[i];
    Slope mu = slope_of(total, s);
    for (int k = 1; k < ft.r; ++k) {
        for (auto& w : subspaces(ft.r, k, q, budget)) {
            DimVec gr = induced_graded_dims(ft, flag, w, q);
            if (slope_of(gr, s) > mu) return false;
        }
    }
    return true;
}

MotivicScalar flag_groupoid_class(const FlagType& ft) {
    ft.validate();
    return MotivicScalar(gaussian_multinomial(ft.r, ft.delta)) / parabolic_order_class(ft.delta);
}

Int count_flags_bruteforce(const FlagType& ft, int q, Budget& budget) {
    return Int(enumerate_flags(ft, q, budget).size());
}

std::vector<std::vector<long>> fil_chi_op(int steps) {
    std::vector<std::vector<long>> c(steps, std::vector<long>(steps, 0));
    for (int i = 0; i < steps; ++i)
        for (int j = i; j < steps; ++j) c[i][j] = 1;
    return c;
}

SlopeLatticeContext fil_slope_context(const FlagType& ft) {
    ft.validate();
    if (!ft.theta_in_degree_cone())
        throw ValidationError(
            "flag weights not weakly decreasing (deep-first): deg_theta is not a degree "
            "function, HN recursion undefined");
    SlopeLatticeContext ctx;
    ctx.stability = StabilityData(ft.theta);
    ctx.chi_op = fil_chi_op(ft.steps());
    ctx.total_class = [](const DimVec& beta) {
        return MotivicScalar(1) / parabolic_order_class(beta);
    };
    ctx.twisted = true;
    return ctx;
}

SlopeLatticeContext fil_slope_context_f1(const FlagType& ft) {
    ft.validate();
    if (!ft.theta_in_degree_cone())
        throw ValidationError(
            "flag weights not weakly decreasing (deep-first): deg_theta is not a degree "
            "function, HN recursion undefined");
    SlopeLatticeContext ctx;
    ctx.stability = StabilityData(ft.theta);
    ctx.chi_op.assign(ft.steps(), std::vector<long>(ft.steps(), 0));
    ctx.total_class = [](const DimVec& beta) {
        Int aut = 1;
        for (int b : beta) aut *= factorial(b);
        return MotivicScalar(Rational(1, aut));
    };
    ctx.twisted = false;
    return ctx;
}

std::vector<std::vector<int>> enumerate_subset_flags(const FlagType& ft, Budget& budget) {
    ft.validate();
    std::int64_t raw = 1;
    for (int i = 0; i < ft.r; ++i) raw *= ft.steps();
    budget.charge(raw, "subset flags");
    std::vector<std::vector<int>> out;
    std::vector<int> levels(ft.r, 0);
    for (;;) {
        DimVec counts(ft.steps(), 0);
        for (int l : levels) ++counts[l];
        bool ok = true;
        for (int i = 0; i < ft.steps(); ++i) ok = ok && counts[i] == ft.delta[i];
        if (ok) out.push_back(levels);
        int i = 0;
        while (i < ft.r && ++levels[i] == ft.steps()) levels[i++] = 0;
        if (i == ft.r) break;
    }
    return out;
}

bool subset_flag_is_semistable(const FlagType& ft, const std::vector<int>& levels) {
    StabilityData s(ft.theta);
    DimVec total(ft.steps());
    for (int i = 0; i < ft.steps(); ++i) total[i] = ft.delta[i];
    Slope mu = slope_of(total, s);
    // subsets W of {0..r-1}, induced graded sizes = counts of levels in W
    for (unsigned mask = 1; mask + 1 < (1u << ft.r); ++mask) {
        DimVec gr(ft.steps(), 0);
        for (int x = 0; x < ft.r; ++x)
            if (mask & (1u << x)) ++gr[levels[x]];
        if (slope_of(gr, s) > mu) return false;
    }
    return true;
}

PeriodDomainResult period_domain_count(const FlagType& ft, PeriodField field, PeriodMode mode,
                                       int q, Budget& budget) {
    ft.validate();
    if (ft.theta.empty()) throw ValidationError("period domain: weights required");
    PeriodDomainResult res;
    res.field = field;
    res.mode = mode;
    DimVec total(ft.steps());
    for (int i = 0; i < ft.steps(); ++i) total[i] = ft.delta[i];

    if (mode == PeriodMode::bruteforce) {
        Int count = 0;
        if (field == PeriodField::Fq) {
            require_prime_field(q);
            for (auto& f : enumerate_flags(ft, q, budget))
                if (flag_is_semistable(ft, f, q, budget)) ++count;
        } else {
            for (auto& levels : enumerate_subset_flags(ft, budget))
                if (subset_flag_is_semistable(ft, levels)) ++count;
        }
        res.count = Rational(count);
        res.polynomial = IntPoly(count);
        return res;
    }

    // recursion: resolve the HN identity in the twisted ring
    if (field == PeriodField::Fq) {
        require_prime_field(q);
        SemistableSolver solver(fil_slope_context(ft));
        MotivicScalar ss = solver.semistable_class_checked(total);
        MotivicScalar n = gl_class(ft.r) * ss;
        res.polynomial = n.as_polynomial();  // period-domain counts are polynomial in q
        res.count = Rational(res.polynomial.evaluate(Int(q)));
    } else {
        SemistableSolver solver(fil_slope_context_f1(ft));
        MotivicScalar ss = solver.semistable_class_checked(total);
        MotivicScalar n = MotivicScalar(Rational(factorial(ft.r))) * ss;
        Rational c = n.as_rational_constant();
        res.count = c;
        if (boost::multiprecision::denominator(c) != 1)
            throw ConsistencyError("period domain (F_1): non-integral count " +
                                   rational_to_string(c));
        res.polynomial = IntPoly(boost::multiprecision::numerator(c));
    }
    return res;
}

}  // namespace hallq
