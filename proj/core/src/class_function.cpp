#include "hallq/class_function.hpp"

#include <algorithm>

namespace hallq {

ClassFunction ClassFunction::sym_irreducible(std::shared_ptr<const FiniteGroupModel> g,
                                             const Partition& lambda) {
    if (!g->is_symmetric()) throw ValidationError("sym_irreducible: not a symmetric group model");
    int r = g->sym_rank();
    auto& table = SymCharacterTable::of(r);
    auto parts = table.partitions();
    std::vector<MotivicScalar> v;
    int li = -1;
    for (size_t i = 0; i < parts.size(); ++i)
        if (parts[i] == lambda) li = static_cast<int>(i);
    if (li < 0) throw ValidationError("sym_irreducible: not a partition of r");
    for (size_t m = 0; m < parts.size(); ++m)
        v.push_back(MotivicScalar(IntPoly(table.value(li, static_cast<int>(m)))));
    return ClassFunction(std::move(g), std::move(v));
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
    if (g_ != o.g_) throw ValidationError("class function: mixed groups");
    std::vector<MotivicScalar> v(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) v[i] = v_[i] + o.v_[i];
    return ClassFunction(g_, std::move(v));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
    if (g_ != o.g_) throw ValidationError("class function: mixed groups");
    std::vector<MotivicScalar> v(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) v[i] = v_[i] - o.v_[i];
    return ClassFunction(g_, std::move(v));
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
    if (g_ != o.g_) throw ValidationError("class function: mixed groups");
    std::vector<MotivicScalar> v(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) v[i] = v_[i] * o.v_[i];
    return ClassFunction(g_, std::move(v));
}

ClassFunction ClassFunction::times(const MotivicScalar& s) const {
    std::vector<MotivicScalar> v(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) v[i] = v_[i] * s;
    return ClassFunction(g_, std::move(v));
}

Rational ClassFunction::dimension_at(const Rational& t0) const {
    const MotivicScalar& val = at_identity();
    Rational num = val.num().evaluate(t0);
    Rational den = val.den().evaluate(t0);
    if (den == 0) throw ValidationError("dimension_at: pole at t0");
    return num / den;
}

MotivicScalar ClassFunction::inner(const ClassFunction& o) const {
    if (g_ != o.g_) throw ValidationError("class function: mixed groups");
    MotivicScalar acc(0);
    for (int c = 0; c < g_->num_classes(); ++c)
        acc += MotivicScalar(Rational(g_->class_sz(c))) * v_[c] * o.v_[c];
    return acc / MotivicScalar(Rational(Int(g_->size())));
}

std::vector<MotivicScalar> ClassFunction::decompose_symmetric() const {
    if (!g_->is_symmetric())
        throw ValidationError("decompose_symmetric: not a symmetric group model");
    auto& table = SymCharacterTable::of(g_->sym_rank());
    std::vector<MotivicScalar> mult;
    for (auto& lambda : table.partitions())
        mult.push_back(inner(sym_irreducible(g_, lambda)));
    return mult;
}

ClassFunction induce(const std::shared_ptr<const FiniteGroupModel>& g,
                     const std::vector<int>& subgroup_members,
                     const std::function<MotivicScalar(int)>& f_on_h) {
    if (subgroup_members.empty()) throw ValidationError("induce: empty subgroup");
    for (int a : subgroup_members)
        for (int b : subgroup_members)
            if (!std::binary_search(subgroup_members.begin(), subgroup_members.end(),
                                    g->mul(a, b)))
                throw ValidationError("induce: H is not a subgroup");
    Int h_order(subgroup_members.size());
    std::vector<MotivicScalar> v;
    for (int c = 0; c < g->num_classes(); ++c) {
        int rep = g->class_rep(c);
        MotivicScalar acc(0);
        for (int x = 0; x < g->size(); ++x) {
            int y = g->mul(g->mul(g->inv(x), rep), x);
            if (std::binary_search(subgroup_members.begin(), subgroup_members.end(), y))
                acc += f_on_h(y);
        }
        v.push_back(acc / MotivicScalar(Rational(h_order)));
    }
    return ClassFunction(g, std::move(v));
}

ClassFunction induce(const std::shared_ptr<const FiniteGroupModel>& g,
                     const std::vector<int>& subgroup_members,
                     const std::vector<int>& embed_of_sub_elem, const ClassFunction& f) {
    // embed_of_sub_elem[i] = id in G of the i-th element of the source model
    std::vector<int> back(g->size(), -1);
    for (size_t i = 0; i < embed_of_sub_elem.size(); ++i) back[embed_of_sub_elem[i]] =
        static_cast<int>(i);
    return induce(g, subgroup_members, [&](int y) {
        if (back[y] < 0) throw ConsistencyError("induce: element outside the embedded subgroup");
        return f.at_element(back[y]);
    });
}

std::function<MotivicScalar(int)> restrict_to(const ClassFunction& f) {
    return [f](int elem) { return f.at_element(elem); };
}

ClassFunction external_product(const ClassFunction& f, const ClassFunction& g) {
    auto prod = FiniteGroupModel::product(f.group(), g.group());
    int nb = g.group()->num_classes();
    std::vector<MotivicScalar> v;
    for (int c = 0; c < prod->num_classes(); ++c) v.push_back(f.at_class(c / nb) * g.at_class(c % nb));
    return ClassFunction(prod, std::move(v));
}

namespace {

// splittings of the multiset mu into k cycle types with prescribed sizes
void split_rec(const std::vector<int>& mu, size_t pos, std::vector<Partition>& acc,
               const std::vector<int>& sizes, std::vector<int>& used,
               const std::function<void(const std::vector<Partition>&)>& emit) {
    if (pos == mu.size()) {
        for (size_t i = 0; i < sizes.size(); ++i)
            if (used[i] != sizes[i]) return;
        emit(acc);
        return;
    }
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (used[i] + mu[pos] > sizes[i]) continue;
        acc[i].push_back(mu[pos]);
        used[i] += mu[pos];
        split_rec(mu, pos + 1, acc, sizes, used, emit);
        used[i] -= mu[pos];
        acc[i].pop_back();
    }
}

}  // namespace

std::vector<MotivicScalar> induce_young_cycle_types(
    int r, const std::vector<int>& eta,
    const std::vector<std::function<MotivicScalar(const Partition&)>>& block_values) {
    if (eta.size() != block_values.size())
        throw ValidationError("induce_young: one value function per block");
    auto parts = partitions_of(r);
    std::vector<MotivicScalar> out;
    for (auto& mu : parts) {
        // Ind(f)(mu) = sum over splittings (mu^(1),...,mu^(k)) of mu with
        // |mu^(i)| = eta_i of prod_i f_i(mu^(i)) * z_mu / prod_i z_{mu^(i)}.
        // Enumerating assignments of the positions of mu's parts counts
        // every splitting with multiplicity prod_j m_j! / prod_{i,j}
        // m_j^(i)!, which equals z_mu / prod z_{mu^(i)} after the j-powers
        // cancel; so the weights drop out.
        MotivicScalar acc(0);
        std::vector<Partition> split(eta.size());
        std::vector<int> used(eta.size(), 0);
        split_rec(mu, 0, split, eta, used, [&](const std::vector<Partition>& s) {
            MotivicScalar term(1);
            for (size_t i = 0; i < s.size(); ++i) {
                Partition p = s[i];
                std::sort(p.rbegin(), p.rend());
                term *= block_values[i](p);
            }
            acc += term;
        });
        out.push_back(acc);
    }
    return out;
}

}  // namespace hallq
