#pragma once

#include <string>
#include <vector>

#include "hallq/rational.hpp"

namespace hallq {

/// Finite group presented by a multiplication table (indices into 0..n-1).
struct FiniteGroupTable {
    std::vector<std::vector<int>> mul;
    int identity = 0;
    std::vector<int> inv;

    int size() const { return static_cast<int>(mul.size()); }
    /// Checks totality, identity, inverses and (for n <= 256) associativity.
    void validate() const;

    static FiniteGroupTable symmetric(int r);
    static FiniteGroupTable cyclic(int n);
};

/// Double coset Hecke algebra of (G, K), realized by the counting transfer
/// on the Cech nerve N(G, G/K): the basis is K\G/K, and the structure
/// constants of 1_a * 1_b at the coset d count intermediate points
///   c^d_{ab} = #{ xK : (x0 K, xK) in O_a, (xK, x2 K) in O_b }
/// for any representative pair (x0 K, x2 K) of O_d.
struct HeckeAlgebra {
    FiniteGroupTable group;
    std::vector<int> subgroup;               // sorted element list, closed
    std::vector<std::vector<int>> cosets;    // left cosets xK, each sorted
    std::vector<int> coset_of;               // element -> coset index
    std::vector<int> double_coset_of_pair;   // coset-pair (i * m + j) -> basis index
    int rank = 0;                            // number of double cosets
    std::vector<std::string> basis_labels;
    /// constants[a][b][d] = c^d_{ab}
    std::vector<std::vector<std::vector<Rational>>> constants;

    int unit_index() const;  // index of the diagonal double coset K e K
    bool is_associative() const;
};

/// Builds the Hecke algebra; throws ValidationError if K is not closed
/// under multiplication.
HeckeAlgebra hecke_structure_constants(const FiniteGroupTable& g, const std::vector<int>& k);

}  // namespace hallq
