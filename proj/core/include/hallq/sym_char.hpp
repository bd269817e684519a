#pragma once

#include <string>
#include <vector>

#include "hallq/rational.hpp"

namespace hallq {

/// Partition of r, parts weakly decreasing.
using Partition = std::vector<int>;

/// All partitions of r in reverse-lexicographic order ((r) first, (1^r) last).
std::vector<Partition> partitions_of(int r);

/// Order of the centralizer of a permutation of cycle type mu:
/// z_mu = prod_i i^{m_i} m_i!.
Int z_of(const Partition& mu);

/// Conjugacy class size r!/z_mu.
Int class_size(int r, const Partition& mu);

/// Compact label like "1^3", "21", "3".
std::string partition_label(const Partition& p);

/// Cycle type of a permutation given in one-line form.
Partition cycle_type(const std::vector<int>& perm);

/// Integer character table of S_r by the Murnaghan-Nakayama recursion.
/// Rows are irreducible characters chi^lambda, columns conjugacy classes mu,
/// both indexed by partitions_of(r).
class SymCharacterTable {
  public:
    static const SymCharacterTable& of(int r);  // cached per r, r <= 8

    int r() const { return r_; }
    const std::vector<Partition>& partitions() const { return parts_; }
    const Int& value(int lambda_idx, int mu_idx) const { return chi_[lambda_idx][mu_idx]; }
    Int degree(int lambda_idx) const { return chi_[lambda_idx].back(); }  // value at 1^r

    /// <row_a, row_b> under the class-weighted inner product; the table is
    /// orthonormal.
    Rational inner(int a, int b) const;

  private:
    explicit SymCharacterTable(int r);
    int r_;
    std::vector<Partition> parts_;
    std::vector<std::vector<Int>> chi_;
};

/// Murnaghan-Nakayama value chi^lambda(mu).
Int mn_character(const Partition& lambda, const Partition& mu);

}  // namespace hallq
