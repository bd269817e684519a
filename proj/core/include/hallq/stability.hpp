#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hallq/quiver_rep.hpp"

namespace hallq {

/// Exact slope value in Q together with an explicit top element (infinity),
/// reserved for rank-zero torsion; rank-zero nonzero objects cannot arise in
/// the quiver or flag models (rank weights are strictly positive).
struct Slope {
    bool infinite = false;
    Rational value = 0;

    static Slope infinity() { return Slope{true, 0}; }

    bool operator==(const Slope& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    bool operator<(const Slope& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return value < o.value;
    }
    bool operator>(const Slope& o) const { return o < *this; }
    bool operator<=(const Slope& o) const { return !(o < *this); }
    bool operator>=(const Slope& o) const { return !(*this < o); }

    std::string to_string() const { return infinite ? "inf" : rational_to_string(value); }
};

/// Degree weights theta per vertex and strictly positive rank weights.
struct StabilityData {
    std::vector<long> theta;
    std::vector<long> rank_weights;  // defaults to all-ones

    StabilityData() = default;
    StabilityData(std::vector<long> th, std::vector<long> rk = {})
        : theta(std::move(th)), rank_weights(std::move(rk)) {
        if (rank_weights.empty()) rank_weights.assign(theta.size(), 1);
        validate();
    }
    void validate() const {
        if (theta.size() != rank_weights.size())
            throw ValidationError("stability: theta/rank length mismatch");
        for (long r : rank_weights)
            if (r <= 0) throw ValidationError("stability: rank weights must be positive");
    }

    long deg(const DimVec& a) const;
    long rk(const DimVec& a) const;
};

/// mu(alpha) = theta . alpha / rk . alpha; alpha = 0 is an error.
Slope slope_of(const DimVec& alpha, const StabilityData& s);

/// Semistability by brute force over all subobjects: every proper nonzero
/// subobject must have slope <= slope(E).
bool is_semistable(const QuiverRepContext& ctx, const QuiverRep& E, const StabilityData& s);

struct HNStep {
    DimVec cls;          // class of the subquotient
    QuiverRep subquot;   // the semistable subquotient itself
    Slope slope;
};

struct HNFiltration {
    std::vector<DimVec> flag_dims;  // dims of 0 < F_1 < ... < F_n = E (F_0 omitted)
    std::vector<HNStep> steps;      // deepest (maximal slope) first
    std::vector<DimVec> type() const {
        std::vector<DimVec> t;
        for (auto& s : steps) t.push_back(s.cls);
        return t;
    }
};

/// The unique flag with semistable subquotients of strictly decreasing
/// slopes, found by repeatedly extracting the maximal destabilizing
/// subobject (maximal slope, then maximal rank). Uniqueness is asserted:
/// if another subobject attains the chosen (slope, rank), this is a
/// consistency error.
HNFiltration hn_filtration(const QuiverRepContext& ctx, const QuiverRep& E,
                           const StabilityData& s);

/// All decompositions alpha = a_1 + ... + a_n into nonzero effective vectors
/// with strictly decreasing slopes, in deterministic (lexicographic DFS)
/// order. Includes the one-step type (alpha).
std::vector<std::vector<DimVec>> hn_types(const DimVec& alpha, const StabilityData& s);

/// Ordered tuples (a_1, ..., a_m) of nonzero effective vectors summing to
/// alpha with mu(a_1 + ... + a_i) > mu(alpha) for all i < m (the index set
/// of Reineke's inversion formula).
std::vector<std::vector<DimVec>> inversion_tuples(const DimVec& alpha, const StabilityData& s);

}  // namespace hallq
