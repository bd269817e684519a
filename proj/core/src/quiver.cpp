#include "hallq/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace hallq {

void Quiver::validate() const {
    int n = num_vertices();
    if (n == 0) throw ValidationError("quiver: no vertices");
    for (auto& [s, t] : arrows) {
        if (s < 0 || s >= n || t < 0 || t >= n)
            throw ValidationError("quiver: arrow endpoint out of range");
        if (s == t) throw ValidationError("quiver: loops are not allowed (acyclic required)");
    }
    // Kahn's algorithm; arrows along a cycle never get removed.
    std::vector<int> indeg(n, 0);
    for (auto& [s, t] : arrows) ++indeg[t];
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (auto& [s, t] : arrows)
            if (s == v && --indeg[t] == 0) stack.push_back(t);
    }
    if (seen != n) throw ValidationError("quiver: cyclic quivers are rejected");
}

Quiver Quiver::kronecker(int arrows) {
    Quiver q{{"1", "2"}, {}};
    for (int i = 0; i < arrows; ++i) q.arrows.emplace_back(0, 1);
    return q;
}

Quiver Quiver::linear(int n) {
    Quiver q;
    for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) q.arrows.emplace_back(i, i + 1);
    return q;
}

int total_dim(const DimVec& d) {
    int s = 0;
    for (int x : d) s += x;
    return s;
}

void require_effective(const DimVec& d) {
    for (int x : d)
        if (x < 0) throw ValidationError("dimension vector must be effective");
}

DimVec dim_sum(const DimVec& a, const DimVec& b) {
    if (a.size() != b.size()) throw ValidationError("dimension vector length mismatch");
    DimVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

DimVec dim_diff(const DimVec& a, const DimVec& b) {
    if (a.size() != b.size()) throw ValidationError("dimension vector length mismatch");
    DimVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw ValidationError("dimension vector difference not effective");
    }
    return r;
}

bool dim_is_zero(const DimVec& d) {
    for (int x : d)
        if (x != 0) return false;
    return true;
}

std::vector<DimVec> effective_vectors_below(const DimVec& bound) {
    std::vector<DimVec> out;
    DimVec cur(bound.size(), 0);
    for (;;) {
        size_t i = 0;
        while (i < bound.size() && cur[i] == bound[i]) cur[i++] = 0;
        if (i == bound.size()) break;
        ++cur[i];
        out.push_back(cur);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string dim_to_string(const DimVec& d) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

}  // namespace hallq
