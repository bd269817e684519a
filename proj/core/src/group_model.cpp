#include "hallq/group_model.hpp"

#include <algorithm>
#include <map>

namespace hallq {

namespace {

std::vector<std::vector<int>> all_perms(int r) {
    std::vector<int> p(r);
    for (int i = 0; i < r; ++i) p[i] = i;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

void FiniteGroupModel::compute_classes_bruteforce() {
    int n = table_.size();
    class_of_.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (class_of_[x] >= 0) continue;
        int c = static_cast<int>(class_reps_.size());
        Int sz = 0;
        for (int g = 0; g < n; ++g) {
            int y = table_.mul[table_.mul[g][x]][table_.inv[g]];
            if (class_of_[y] < 0) {
                class_of_[y] = c;
                ++sz;
            }
        }
        class_reps_.push_back(x);
        class_sizes_.push_back(sz);
        class_labels_.push_back("c" + std::to_string(c) + "(g" + std::to_string(x) + ")");
    }
}

std::shared_ptr<const FiniteGroupModel> FiniteGroupModel::symmetric(int r) {
    if (r < 0 || r > 8) throw ValidationError("symmetric group model: r in 0..8 required");
    auto m = std::shared_ptr<FiniteGroupModel>(new FiniteGroupModel());
    m->name_ = "S_" + std::to_string(r);
    m->sym_rank_ = r;
    m->perms_ = all_perms(std::max(r, 1));
    if (r == 0) m->perms_ = {{}};
    std::map<std::vector<int>, int> index;
    int n = static_cast<int>(m->perms_.size());
    for (int i = 0; i < n; ++i) index[m->perms_[i]] = i;
    m->table_.mul.assign(n, std::vector<int>(n));
    m->table_.inv.resize(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> pinv(m->perms_[i].size());
        for (size_t k = 0; k < pinv.size(); ++k) pinv[m->perms_[i][k]] = static_cast<int>(k);
        m->table_.inv[i] = index[pinv];
        for (int j = 0; j < n; ++j) {
            std::vector<int> comp(m->perms_[i].size());
            for (size_t k = 0; k < comp.size(); ++k) comp[k] = m->perms_[i][m->perms_[j][k]];
            m->table_.mul[i][j] = index[comp];
        }
    }
    std::vector<int> id(m->perms_[0].size());
    for (size_t k = 0; k < id.size(); ++k) id[k] = static_cast<int>(k);
    m->table_.identity = index[id];

    // classes = cycle types, ordered as partitions_of(r)
    auto parts = partitions_of(r);
    std::map<Partition, int> pidx;
    for (size_t i = 0; i < parts.size(); ++i) pidx[parts[i]] = static_cast<int>(i);
    m->class_reps_.assign(parts.size(), -1);
    m->class_sizes_.resize(parts.size());
    m->class_of_.resize(n);
    for (size_t i = 0; i < parts.size(); ++i) {
        m->class_sizes_[i] = class_size(r, parts[i]);
        m->class_labels_.push_back(partition_label(parts[i]));
    }
    for (int i = 0; i < n; ++i) {
        Partition t = cycle_type(m->perms_[i]);
        int c = pidx.at(t);
        m->class_of_[i] = c;
        if (m->class_reps_[c] < 0) m->class_reps_[c] = i;
    }
    return m;
}

std::shared_ptr<const FiniteGroupModel> FiniteGroupModel::gl2(int q) {
    require_prime_field(q);
    auto m = std::shared_ptr<FiniteGroupModel>(new FiniteGroupModel());
    m->name_ = "GL_2(F_" + std::to_string(q) + ")";
    m->q_ = q;
    Budget b;
    m->mats_ = general_linear_group(2, q, b);
    int n = static_cast<int>(m->mats_.size());
    std::map<FqMat, int> index;
    for (int i = 0; i < n; ++i) index[m->mats_[i]] = i;
    m->table_.mul.assign(n, std::vector<int>(n));
    m->table_.inv.resize(n);
    for (int i = 0; i < n; ++i) {
        m->table_.inv[i] = index.at(mat_inverse(m->mats_[i], q));
        for (int j = 0; j < n; ++j)
            m->table_.mul[i][j] = index.at(mat_mul(m->mats_[i], m->mats_[j], q));
    }
    m->table_.identity = index.at(FqMat::identity(2));
    m->compute_classes_bruteforce();
    return m;
}

std::shared_ptr<const FiniteGroupModel> FiniteGroupModel::gl1(int q) {
    require_prime_field(q);
    auto m = std::shared_ptr<FiniteGroupModel>(new FiniteGroupModel());
    m->name_ = "GL_1(F_" + std::to_string(q) + ")";
    m->q_ = q;
    Budget b;
    m->mats_ = general_linear_group(1, q, b);
    int n = q - 1;
    std::map<FqMat, int> index;
    for (int i = 0; i < n; ++i) index[m->mats_[i]] = i;
    m->table_.mul.assign(n, std::vector<int>(n));
    m->table_.inv.resize(n);
    for (int i = 0; i < n; ++i) {
        m->table_.inv[i] = index.at(mat_inverse(m->mats_[i], q));
        for (int j = 0; j < n; ++j)
            m->table_.mul[i][j] = index.at(mat_mul(m->mats_[i], m->mats_[j], q));
    }
    m->table_.identity = index.at(FqMat::identity(1));
    m->compute_classes_bruteforce();
    return m;
}

std::shared_ptr<const FiniteGroupModel> FiniteGroupModel::from_table(FiniteGroupTable table,
                                                                     std::string name) {
    table.validate();
    auto m = std::shared_ptr<FiniteGroupModel>(new FiniteGroupModel());
    m->name_ = std::move(name);
    m->table_ = std::move(table);
    m->compute_classes_bruteforce();
    return m;
}

std::shared_ptr<const FiniteGroupModel> FiniteGroupModel::product(
    const std::shared_ptr<const FiniteGroupModel>& a,
    const std::shared_ptr<const FiniteGroupModel>& b) {
    int na = a->size(), nb = b->size();
    if (static_cast<long long>(na) * nb > 20000)
        throw ValidationError("product group too large");
    FiniteGroupTable t;
    int n = na * nb;
    t.mul.assign(n, std::vector<int>(n));
    t.inv.resize(n);
    auto enc = [&](int x, int y) { return x * nb + y; };
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) {
            int i = enc(x, y);
            t.inv[i] = enc(a->inv(x), b->inv(y));
            for (int u = 0; u < na; ++u)
                for (int v = 0; v < nb; ++v)
                    t.mul[i][enc(u, v)] = enc(a->mul(x, u), b->mul(y, v));
        }
    t.identity = enc(a->identity(), b->identity());
    auto m = std::shared_ptr<FiniteGroupModel>(new FiniteGroupModel());
    m->name_ = a->name() + "x" + b->name();
    m->table_ = std::move(t);
    // classes of a product are pairs of classes
    m->class_of_.resize(n);
    for (int ca = 0; ca < a->num_classes(); ++ca)
        for (int cb = 0; cb < b->num_classes(); ++cb) {
            m->class_reps_.push_back(enc(a->class_rep(ca), b->class_rep(cb)));
            m->class_sizes_.push_back(a->class_sz(ca) * b->class_sz(cb));
            m->class_labels_.push_back("(" + a->class_label(ca) + "," + b->class_label(cb) + ")");
        }
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y)
            m->class_of_[enc(x, y)] = a->class_of(x) * b->num_classes() + b->class_of(y);
    return m;
}

Int ParabolicSubgroup::order_formula() const {
    if (group->is_symmetric()) {
        Int r = 1;
        for (int e : composition) r *= factorial(e);
        return r;
    }
    Int q(group->field());
    Int r = 1;
    int cross = 0;
    for (size_t i = 0; i < composition.size(); ++i) {
        for (size_t j = i + 1; j < composition.size(); ++j)
            cross += composition[i] * composition[j];
        r *= gl_order(composition[i], q);
    }
    return r * int_pow(q, cross);
}

void ParabolicSubgroup::validate() const {
    for (int a : members)
        for (int b : members) {
            int c = group->mul(a, b);
            if (!std::binary_search(members.begin(), members.end(), c))
                throw ConsistencyError("parabolic: not closed under multiplication");
        }
    if (Int(members.size()) != order_formula())
        throw ConsistencyError("parabolic: order does not match the formula");
}

ParabolicSubgroup parabolic_subgroup(const std::shared_ptr<const FiniteGroupModel>& g,
                                     const std::vector<int>& eta) {
    ParabolicSubgroup p;
    p.group = g;
    p.composition = eta;
    int sum = 0;
    for (int e : eta) {
        if (e < 0) throw ValidationError("parabolic: negative block");
        sum += e;
    }
    if (g->is_symmetric()) {
        if (sum != g->sym_rank()) throw ValidationError("parabolic: blocks must sum to r");
        // blocks of consecutive points, deep block first
        std::vector<int> block_of(sum);
        int pos = 0, bi = 0;
        for (int e : eta) {
            for (int k = 0; k < e; ++k) block_of[pos++] = bi;
            ++bi;
        }
        for (int i = 0; i < g->size(); ++i) {
            auto& perm = g->perms()[i];
            bool ok = true;
            for (int x = 0; x < sum && ok; ++x) ok = block_of[perm[x]] == block_of[x];
            if (ok) p.members.push_back(i);
        }
    } else {
        // block upper-triangular matrices; the first block spans the
        // deepest subspace (first coordinates)
        if (g->matrices().empty()) throw ValidationError("parabolic: unsupported group model");
        int r = g->matrices()[0].rows;
        if (sum != r) throw ValidationError("parabolic: blocks must sum to r");
        std::vector<int> block_of(r);
        int pos = 0, bi = 0;
        for (int e : eta) {
            for (int k = 0; k < e; ++k) block_of[pos++] = bi;
            ++bi;
        }
        for (int i = 0; i < g->size(); ++i) {
            auto& mat = g->matrices()[i];
            bool ok = true;
            for (int row = 0; row < r && ok; ++row)
                for (int col = 0; col < r && ok; ++col)
                    if (mat.at(row, col) && block_of[row] > block_of[col]) ok = false;
            if (ok) p.members.push_back(i);
        }
    }
    std::sort(p.members.begin(), p.members.end());
    p.validate();
    return p;
}

}  // namespace hallq
