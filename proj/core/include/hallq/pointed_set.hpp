#pragma once

#include <vector>

#include "hallq/quiver.hpp"
#include "hallq/rational.hpp"

namespace hallq {

/// The F_1 model: finite pointed sets, admissible monos = based injections,
/// admissible epis = collapse maps. Iso classes are sizes; Aut of the
/// r-element object is S_r. Objects are identified with their sets of
/// non-basepoint elements {0, ..., r-1}.
class PointedSetContext {
  public:
    explicit PointedSetContext(Budget budget = Budget()) : budget_(budget) {}

    Budget& budget() const { return budget_; }

    /// A subobject of the size-n object is a subset; the quotient collapses
    /// it. Subsets are encoded as bitmasks over {0, ..., n-1}.
    std::vector<unsigned> subsets(int n) const;

    Int aut_order(int n) const { return factorial(n); }
    /// Number of subobjects of the size-n object of size k.
    Int sub_count(int n, int k) const;

  private:
    mutable Budget budget_;
};

}  // namespace hallq
