#pragma once

#include <cstdint>
#include <vector>

#include "hallq/errors.hpp"
#include "hallq/rational.hpp"

namespace hallq {

/// The engine works over prime fields F_p; entries are residues 0..p-1.
void require_prime_field(int q);

/// Dense matrix over F_p, row-major. Vectors are columns; a map F^s -> F^t
/// is a t x s matrix acting by left multiplication.
struct FqMat {
    int rows = 0, cols = 0;
    std::vector<std::uint8_t> a;

    FqMat() = default;
    FqMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    std::uint8_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    std::uint8_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static FqMat identity(int n);
    bool operator==(const FqMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator<(const FqMat& o) const { return a < o.a; }
};

FqMat mat_mul(const FqMat& x, const FqMat& y, int p);
FqMat mat_sub(const FqMat& x, const FqMat& y, int p);
/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(FqMat& m, int p);
int mat_rank(FqMat m, int p);
bool mat_invertible(const FqMat& m, int p);
FqMat mat_inverse(const FqMat& m, int p);
/// Basis of the right kernel {x : m x = 0}, as columns.
FqMat kernel_basis(const FqMat& m, int p);
/// Horizontal concatenation [x | y].
FqMat mat_hcat(const FqMat& x, const FqMat& y);
FqMat mat_transpose(const FqMat& m);

/// Is v (a column) in the column space of b?
bool in_column_space(const FqMat& b, const std::vector<std::uint8_t>& v, int p);
/// Is every column of s in the column space of b?
bool subspace_contained(const FqMat& s, const FqMat& b, int p);
/// Solve b x = v where b has full column rank; throws if unsolvable.
std::vector<std::uint8_t> solve_full_rank(const FqMat& b, const std::vector<std::uint8_t>& v, int p);

/// All elements of GL_d(F_p), cached per (d, p). Budget-checked against the
/// raw count p^(d*d).
const std::vector<FqMat>& general_linear_group(int d, int p, Budget& budget);
Int gl_order(int d, const Int& q);

/// All k-dimensional subspaces of F_p^n, each as an n x k column basis in
/// column-reduced echelon form (unique representative per subspace).
std::vector<FqMat> subspaces(int n, int k, int p, Budget& budget);

/// Number of k-dimensional subspaces of F_q^n (Gaussian binomial at q).
Int subspace_count(int n, int k, const Int& q);

}  // namespace hallq
