#include "hallq/pointed_set.hpp"

namespace hallq {

std::vector<unsigned> PointedSetContext::subsets(int n) const {
    if (n < 0 || n > 20) throw ValidationError("pointed set size out of range");
    budget_.charge(1LL << n, "pointed set subsets");
    std::vector<unsigned> out;
    out.reserve(1u << n);
    for (unsigned m = 0; m < (1u << n); ++m) out.push_back(m);
    return out;
}

Int PointedSetContext::sub_count(int n, int k) const {
    if (k < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace hallq
