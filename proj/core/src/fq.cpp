#include "hallq/fq.hpp"

#include <map>
#include <mutex>

namespace hallq {

void require_prime_field(int q) {
    if (q < 2) throw ValidationError("field size must be >= 2");
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0)
            throw ValidationError("field size " + std::to_string(q) +
                                  " is not prime (prime fields only)");
}

FqMat FqMat::identity(int n) {
    FqMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FqMat mat_mul(const FqMat& x, const FqMat& y, int p) {
    if (x.cols != y.rows) throw ValidationError("mat_mul: shape mismatch");
    FqMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            int xik = x.at(i, k);
            if (!xik) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = static_cast<std::uint8_t>((r.at(i, j) + xik * y.at(k, j)) % p);
        }
    return r;
}

FqMat mat_sub(const FqMat& x, const FqMat& y, int p) {
    FqMat r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i)
        r.a[i] = static_cast<std::uint8_t>((x.a[i] + p - y.a[i]) % p);
    return r;
}

namespace {
int inv_mod(int a, int p) {
    int r = 1, b = a % p, e = p - 2;  // Fermat
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}
}  // namespace

std::vector<int> rref(FqMat& m, int p) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col)) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
        int inv = inv_mod(m.at(row, col), p);
        for (int j = 0; j < m.cols; ++j)
            m.at(row, j) = static_cast<std::uint8_t>(m.at(row, j) * inv % p);
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || !m.at(i, col)) continue;
            int f = m.at(i, col);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = static_cast<std::uint8_t>((m.at(i, j) + (p - f) * m.at(row, j)) % p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int mat_rank(FqMat m, int p) { return static_cast<int>(rref(m, p).size()); }

bool mat_invertible(const FqMat& m, int p) {
    return m.rows == m.cols && mat_rank(m, p) == m.rows;
}

FqMat mat_inverse(const FqMat& m, int p) {
    if (m.rows != m.cols) throw ValidationError("mat_inverse: not square");
    int n = m.rows;
    if (n == 0) return m;
    FqMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto piv = rref(aug, p);
    if (static_cast<int>(piv.size()) != n || piv.back() != n - 1)
        throw ValidationError("mat_inverse: singular matrix");
    FqMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

FqMat kernel_basis(const FqMat& m, int p) {
    FqMat r = m;
    auto pivots = rref(r, p);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FqMat res(m.cols, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        res.at(fc, static_cast<int>(k)) = 1;
        for (size_t i = 0; i < pivots.size(); ++i) {
            int v = r.at(static_cast<int>(i), fc);
            res.at(pivots[i], static_cast<int>(k)) = static_cast<std::uint8_t>((p - v) % p);
        }
    }
    return res;
}

FqMat mat_hcat(const FqMat& x, const FqMat& y) {
    if (x.rows != y.rows) throw ValidationError("mat_hcat: shape mismatch");
    FqMat r(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

FqMat mat_transpose(const FqMat& m) {
    FqMat r(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

bool in_column_space(const FqMat& b, const std::vector<std::uint8_t>& v, int p) {
    FqMat vm(b.rows, 1);
    for (int i = 0; i < b.rows; ++i) vm.at(i, 0) = v[i];
    return mat_rank(mat_hcat(b, vm), p) == mat_rank(b, p);
}

bool subspace_contained(const FqMat& s, const FqMat& b, int p) {
    return mat_rank(mat_hcat(b, s), p) == mat_rank(b, p);
}

std::vector<std::uint8_t> solve_full_rank(const FqMat& b, const std::vector<std::uint8_t>& v,
                                          int p) {
    FqMat aug(b.rows, b.cols + 1);
    for (int i = 0; i < b.rows; ++i) {
        for (int j = 0; j < b.cols; ++j) aug.at(i, j) = b.at(i, j);
        aug.at(i, b.cols) = v[i];
    }
    auto piv = rref(aug, p);
    std::vector<std::uint8_t> x(b.cols, 0);
    for (size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == b.cols) throw ConsistencyError("solve_full_rank: inconsistent system");
        x[piv[i]] = aug.at(static_cast<int>(i), b.cols);
    }
    return x;
}

const std::vector<FqMat>& general_linear_group(int d, int p, Budget& budget) {
    static std::map<std::pair<int, int>, std::vector<FqMat>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(d, p);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::int64_t total = 1;
    for (int i = 0; i < d * d; ++i) {
        total *= p;
        if (total > (std::int64_t)1 << 40) throw BudgetError("general_linear_group: too large");
    }
    budget.charge(total, "general_linear_group");
    std::vector<FqMat> out;
    FqMat m(d, d);
    std::vector<int> digits(d * d, 0);
    for (std::int64_t c = 0; c < total; ++c) {
        for (int i = 0; i < d * d; ++i) m.a[i] = static_cast<std::uint8_t>(digits[i]);
        if (mat_invertible(m, p)) out.push_back(m);
        for (int i = 0; i < d * d; ++i) {
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
    }
    return cache.emplace(key, std::move(out)).first->second;
}

Int gl_order(int d, const Int& q) {
    Int r = 1;
    for (int n = 0; n < d; ++n) r *= int_pow(q, d) - int_pow(q, n);
    return r;
}

std::vector<FqMat> subspaces(int n, int k, int p, Budget& budget) {
    if (k < 0 || k > n) return {};
    std::vector<FqMat> out;
    // choose pivot rows 0 <= p_1 < ... < p_k < n (column echelon form with
    // pivots at those rows), then fill the free entries
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    auto advance_pivots = [&]() -> bool {
        for (int i = k - 1; i >= 0; --i) {
            if (piv[i] < n - (k - i)) {
                ++piv[i];
                for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    if (k == 0) {
        out.emplace_back(n, 0);
        return out;
    }
    do {
        // free positions: rows r > piv[c] with r not a pivot row
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_piv(n, false);
        for (int c = 0; c < k; ++c) is_piv[piv[c]] = true;
        for (int c = 0; c < k; ++c)
            for (int r = piv[c] + 1; r < n; ++r)
                if (!is_piv[r]) free_pos.emplace_back(r, c);
        std::int64_t total = 1;
        for (size_t i = 0; i < free_pos.size(); ++i) total *= p;
        budget.charge(total, "subspaces");
        std::vector<int> digits(free_pos.size(), 0);
        for (std::int64_t cnt = 0; cnt < total; ++cnt) {
            FqMat b(n, k);
            for (int c = 0; c < k; ++c) b.at(piv[c], c) = 1;
            for (size_t i = 0; i < free_pos.size(); ++i)
                b.at(free_pos[i].first, free_pos[i].second) = static_cast<std::uint8_t>(digits[i]);
            out.push_back(std::move(b));
            for (size_t i = 0; i < free_pos.size(); ++i) {
                if (++digits[i] < p) break;
                digits[i] = 0;
            }
        }
    } while (advance_pivots());
    return out;
}

Int subspace_count(int n, int k, const Int& q) {
    if (k < 0 || k > n) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= int_pow(q, n - i) - 1;
        den *= int_pow(q, i + 1) - 1;
    }
    return num / den;
}

}  // namespace hallq
