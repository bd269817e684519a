#include "hallq/sym_char.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "hallq/errors.hpp"

namespace hallq {

namespace {
void partitions_rec(int rest, int max_part, Partition& acc, std::vector<Partition>& out) {
    if (rest == 0) {
        out.push_back(acc);
        return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(rest - p, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int r) {
    if (r < 0) throw ValidationError("partitions_of: negative");
    std::vector<Partition> out;
    Partition acc;
    partitions_rec(r, r == 0 ? 1 : r, acc, out);
    return out;
}

Int z_of(const Partition& mu) {
    std::map<int, int> mult;
    for (int p : mu) ++mult[p];
    Int z = 1;
    for (auto& [part, m] : mult) z *= int_pow(Int(part), m) * factorial(m);
    return z;
}

Int class_size(int r, const Partition& mu) { return factorial(r) / z_of(mu); }

std::string partition_label(const Partition& p) {
    if (p.empty()) return "()";
    std::ostringstream os;
    int i = 0;
    int n = static_cast<int>(p.size());
    while (i < n) {
        int j = i;
        while (j < n && p[j] == p[i]) ++j;
        if (i) os << ".";
        os << p[i];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

Partition cycle_type(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    Partition t;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        t.push_back(len);
    }
    std::sort(t.rbegin(), t.rend());
    return t;
}

// chi^lambda(mu) by removing a border strip of length mu[0] from lambda.
Int mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.empty() && mu.empty()) return 1;
    if (lambda.empty() || mu.empty()) throw ValidationError("mn_character: size mismatch");
    int k = mu[0];
    Partition rest(mu.begin() + 1, mu.end());
    Int acc = 0;
    // beta-number formulation: border strips of length k correspond to
    // beta-numbers b with b - k >= 0 not already present; the sign is
    // (-1)^{number of beta-numbers jumped over}
    int rows2 = static_cast<int>(lambda.size());
    std::vector<long> beta(rows2);
    for (int i = 0; i < rows2; ++i) beta[i] = lambda[i] + (rows2 - 1 - i);
    for (int i = 0; i < rows2; ++i) {
        long nb = beta[i] - k;
        if (nb < 0) continue;
        bool clash = false;
        int jumped = 0;
        for (int j = 0; j < rows2; ++j) {
            if (j == i) continue;
            if (beta[j] == nb) clash = true;
            if (beta[j] < beta[i] && beta[j] > nb) ++jumped;
        }
        if (clash) continue;
        std::vector<long> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        Partition nl;
        int m = static_cast<int>(nbeta.size());
        for (int j = 0; j < m; ++j) {
            long part = nbeta[j] - (m - 1 - j);
            if (part < 0) throw ConsistencyError("mn_character: bad beta numbers");
            if (part > 0) nl.push_back(static_cast<int>(part));
        }
        Int sub = mn_character(nl, rest);
        acc += (jumped % 2 == 0) ? sub : -sub;
    }
    return acc;
}

SymCharacterTable::SymCharacterTable(int r) : r_(r), parts_(partitions_of(r)) {
    int n = static_cast<int>(parts_.size());
    chi_.assign(n, std::vector<Int>(n));
    for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) chi_[l][m] = mn_character(parts_[l], parts_[m]);
}

const SymCharacterTable& SymCharacterTable::of(int r) {
    if (r < 0 || r > 8) throw ValidationError("character table: r must be in 0..8");
    static std::map<int, SymCharacterTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(r);
    if (it == cache.end()) it = cache.emplace(r, SymCharacterTable(r)).first;
    return it->second;
}

Rational SymCharacterTable::inner(int a, int b) const {
    Rational acc = 0;
    for (size_t m = 0; m < parts_.size(); ++m)
        acc += Rational(class_size(r_, parts_[m]) * chi_[a][m] * chi_[b][m]);
    return acc / Rational(factorial(r_));
}

}  // namespace hallq
