#include "hallq/hecke.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hallq/errors.hpp"

namespace hallq {

void FiniteGroupTable::validate() const {
    int n = size();
    if (n == 0) throw ValidationError("group: empty multiplication table");
    for (auto& row : mul) {
        if (static_cast<int>(row.size()) != n)
            throw ValidationError("group: multiplication table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw ValidationError("group: table entry out of range");
    }
    int e = -1;
    for (int c = 0; c < n; ++c) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = mul[c][x] == x && mul[x][c] == x;
        if (ok) {
            e = c;
            break;
        }
    }
    if (e < 0) throw ValidationError("group: no identity element");
    if (e != identity) throw ValidationError("group: identity index mismatch");
    if (static_cast<int>(inv.size()) != n) throw ValidationError("group: inverse list size");
    for (int x = 0; x < n; ++x)
        if (mul[x][inv[x]] != e || mul[inv[x]][x] != e)
            throw ValidationError("group: wrong inverse");
    if (n <= 256) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                        throw ValidationError("group: multiplication not associative");
    }
}

namespace {

std::vector<std::vector<int>> permutations(int r) {
    std::vector<int> p(r);
    for (int i = 0; i < r; ++i) p[i] = i;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

FiniteGroupTable FiniteGroupTable::symmetric(int r) {
    auto perms = permutations(r);
    int n = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[perms[i]] = i;
    FiniteGroupTable g;
    g.mul.assign(n, std::vector<int>(n));
    g.inv.resize(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> pinv(r);
        for (int k = 0; k < r; ++k) pinv[perms[i][k]] = k;
        g.inv[i] = index[pinv];
        for (int j = 0; j < n; ++j) {
            std::vector<int> comp(r);
            for (int k = 0; k < r; ++k) comp[k] = perms[i][perms[j][k]];  // (p_i . p_j)(k)
            g.mul[i][j] = index[comp];
        }
    }
    g.identity = index[perms[0]];
    return g;
}

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
    FiniteGroupTable g;
    g.mul.assign(n, std::vector<int>(n));
    g.inv.resize(n);
    for (int i = 0; i < n; ++i) {
        g.inv[i] = (n - i) % n;
        for (int j = 0; j < n; ++j) g.mul[i][j] = (i + j) % n;
    }
    return g;
}

int HeckeAlgebra::unit_index() const {
    int e = group.identity;
    return double_coset_of_pair[coset_of[e] * static_cast<int>(cosets.size()) + coset_of[e]];
}

bool HeckeAlgebra::is_associative() const {
    for (int a = 0; a < rank; ++a)
        for (int b = 0; b < rank; ++b)
            for (int c = 0; c < rank; ++c)
                for (int d = 0; d < rank; ++d) {
                    Rational lhs = 0, rhs = 0;
                    for (int m = 0; m < rank; ++m) {
                        lhs += constants[a][b][m] * constants[m][c][d];
                        rhs += constants[b][c][m] * constants[a][m][d];
                    }
                    if (lhs != rhs) return false;
                }
    return true;
}

HeckeAlgebra hecke_structure_constants(const FiniteGroupTable& g, const std::vector<int>& k) {
    g.validate();
    int n = g.size();
    std::set<int> ks(k.begin(), k.end());
    if (ks.empty() || !ks.count(g.identity))
        throw ValidationError("hecke: subgroup must contain the identity");
    for (int a : ks) {
        if (a < 0 || a >= n) throw ValidationError("hecke: subgroup element out of range");
        for (int b : ks)
            if (!ks.count(g.mul[a][b]))
                throw ValidationError("hecke: K is not closed under multiplication");
    }

    HeckeAlgebra h;
    h.group = g;
    h.subgroup.assign(ks.begin(), ks.end());

    // left cosets xK
    h.coset_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (h.coset_of[x] >= 0) continue;
        int ci = static_cast<int>(h.cosets.size());
        std::vector<int> coset;
        for (int a : ks) coset.push_back(g.mul[x][a]);
        std::sort(coset.begin(), coset.end());
        coset.erase(std::unique(coset.begin(), coset.end()), coset.end());
        for (int y : coset) h.coset_of[y] = ci;
        h.cosets.push_back(std::move(coset));
    }
    int m = static_cast<int>(h.cosets.size());

    // orbits of G on pairs of cosets (= double cosets K\G/K)
    h.double_coset_of_pair.assign(static_cast<size_t>(m) * m, -1);
    auto act = [&](int gel, int ci) { return h.coset_of[g.mul[gel][h.cosets[ci][0]]]; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (h.double_coset_of_pair[i * m + j] >= 0) continue;
            int d = h.rank++;
            for (int gel = 0; gel < n; ++gel)
                h.double_coset_of_pair[act(gel, i) * m + act(gel, j)] = d;
            int rep = g.mul[g.inv[h.cosets[i][0]]][h.cosets[j][0]];
            h.basis_labels.push_back("K*g" + std::to_string(rep) + "*K");
        }

    // structure constants by direct convolution over G/K
    h.constants.assign(h.rank, std::vector<std::vector<Rational>>(
                                   h.rank, std::vector<Rational>(h.rank, Rational(0))));
    std::vector<std::pair<int, int>> reps(h.rank, {-1, -1});
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int d = h.double_coset_of_pair[i * m + j];
            if (reps[d].first < 0) reps[d] = {i, j};
        }
    for (int a = 0; a < h.rank; ++a)
        for (int b = 0; b < h.rank; ++b)
            for (int d = 0; d < h.rank; ++d) {
                auto [x0, x2] = reps[d];
                Int cnt = 0;
                for (int x1 = 0; x1 < m; ++x1)
                    if (h.double_coset_of_pair[x0 * m + x1] == a &&
                        h.double_coset_of_pair[x1 * m + x2] == b)
                        ++cnt;
                h.constants[a][b][d] = Rational(cnt);
            }
    return h;
}

}  // namespace hallq
