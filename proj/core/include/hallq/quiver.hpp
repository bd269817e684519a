#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hallq/errors.hpp"

namespace hallq {

/// Finite quiver with labeled vertices. Loops are rejected and the quiver
/// must be acyclic: the path algebra is then finite dimensional and
/// hereditary, which the Ext-via-Euler-form computation relies on.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> arrows;  // (source index, target index)

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    void validate() const;

    static Quiver a1() { return Quiver{{"1"}, {}}; }
    static Quiver a2() { return Quiver{{"1", "2"}, {{0, 1}}}; }
    static Quiver kronecker(int arrows = 2);
    /// Linearly oriented A_n: 1 -> 2 -> ... -> n.
    static Quiver linear(int n);

    bool operator==(const Quiver& o) const {
        return vertices == o.vertices && arrows == o.arrows;
    }
};

using DimVec = std::vector<int>;

int total_dim(const DimVec& d);
void require_effective(const DimVec& d);
DimVec dim_sum(const DimVec& a, const DimVec& b);
/// a - b entrywise; throws if any entry would go negative.
DimVec dim_diff(const DimVec& a, const DimVec& b);
bool dim_is_zero(const DimVec& d);

/// All nonzero effective vectors e with e <= bound entrywise, in
/// lexicographic order.
std::vector<DimVec> effective_vectors_below(const DimVec& bound);

std::string dim_to_string(const DimVec& d);

}  // namespace hallq
