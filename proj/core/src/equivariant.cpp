#include "hallq/equivariant.hpp"

namespace hallq {

std::shared_ptr<const FiniteGroupModel> period_domain_group(const FlagType& ft, PeriodField field,
                                                            int q) {
    if (field == PeriodField::Fq) {
        if (ft.r > 2)
            throw ValidationError(
                "equivariant period domain over F_q: explicit group model only for r <= 2");
        require_prime_field(q);
        if (q > 3) throw ValidationError("equivariant period domain over F_q: q in {2,3}");
        return ft.r <= 1 ? FiniteGroupModel::gl1(q) : FiniteGroupModel::gl2(q);
    }
    if (ft.r > 6)
        throw ValidationError("equivariant period domain over F_1: r <= 6 required");
    return FiniteGroupModel::symmetric(ft.r);
}

ClassFunction equivariant_period_domain(const FlagType& ft, PeriodField field, int q) {
    ft.validate();
    if (ft.theta.empty()) throw ValidationError("equivariant period domain: weights required");
    if (!ft.theta_in_degree_cone())
        throw ValidationError(
            "flag weights not weakly decreasing (deep-first): deg_theta is not a degree "
            "function, HN formalism undefined");
    auto g = period_domain_group(ft, field, q);

    StabilityData s(ft.theta);
    auto chi = fil_chi_op(ft.steps());
    auto chi_eval = [&](const DimVec& x, const DimVec& y) {
        long r = 0;
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = 0; j < y.size(); ++j) r += x[i] * chi[i][j] * y[j];
        return r;
    };

    DimVec total(ft.steps());
    for (int i = 0; i < ft.steps(); ++i) total[i] = ft.delta[i];

    ClassFunction acc = ClassFunction::zero(g);
    for (auto& tau : inversion_tuples(total, s)) {
        std::vector<int> eta;
        long e = 0;
        MotivicScalar scalar(1);
        for (auto& t : tau) {
            eta.push_back(total_dim(t));
            std::vector<int> comp;
            for (int x : t)
                if (x > 0) comp.push_back(x);
            scalar *= MotivicScalar(gaussian_multinomial(total_dim(t), comp));
        }
        for (size_t i = 0; i < tau.size(); ++i)
            for (size_t j = i + 1; j < tau.size(); ++j)
                e += static_cast<long>(eta[i]) * eta[j] - chi_eval(tau[i], tau[j]);
        scalar *= MotivicScalar::lefschetz_pow(static_cast<int>(e));
        if (tau.size() % 2 == 0) scalar = -scalar;

        ParabolicSubgroup p = parabolic_subgroup(g, eta);
        ClassFunction term =
            induce(g, p.members, [&](int) { return MotivicScalar(1); }).times(scalar);
        acc = acc + term;
    }
    return acc;
}

}  // namespace hallq
