#pragma once

#include <map>
#include <vector>

#include "hallq/motivic.hpp"
#include "hallq/quiver.hpp"

namespace hallq {

/// Element of the twisted group ring T^{<zeta, chi_op>}[Z^n], truncated at
/// total dimension N: finitely supported map from effective vectors of
/// total <= N to scalars. Multiplication is
///   (a b)(gamma) = sum_{alpha + beta = gamma} zeta^{chi_op(alpha, beta)}
///                  a(alpha) b(beta),
/// where zeta = L^{-1} on the motivic side and q^{-1} on the counting side.
/// Scalar is MotivicScalar or Rational.
template <class Scalar>
class TwistedSeries {
  public:
    TwistedSeries(std::vector<std::vector<long>> chi_op, int trunc, Scalar zeta)
        : chi_op_(std::move(chi_op)), trunc_(trunc), zeta_(std::move(zeta)) {}

    const std::vector<std::vector<long>>& chi_op() const { return chi_op_; }
    int trunc() const { return trunc_; }
    const Scalar& zeta() const { return zeta_; }
    const std::map<DimVec, Scalar>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    long chi_op_eval(const DimVec& x, const DimVec& y) const {
        long r = 0;
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = 0; j < y.size(); ++j) r += x[i] * chi_op_[i][j] * y[j];
        return r;
    }

    void add(const DimVec& alpha, const Scalar& v) {
        require_effective(alpha);
        if (static_cast<int>(alpha.size()) != static_cast<int>(chi_op_.size()))
            throw ValidationError("twisted series: vector length mismatch");
        if (total_dim(alpha) > trunc_) return;  // hard truncation
        auto it = c_.find(alpha);
        Scalar nv = (it == c_.end() ? Scalar(0) : it->second) + v;
        if (nv == Scalar(0)) {
            if (it != c_.end()) c_.erase(it);
        } else {
            c_[alpha] = nv;
        }
    }

    Scalar coeff(const DimVec& alpha) const {
        auto it = c_.find(alpha);
        return it == c_.end() ? Scalar(0) : it->second;
    }

    bool compatible(const TwistedSeries& o) const {
        return chi_op_ == o.chi_op_ && trunc_ == o.trunc_ && zeta_ == o.zeta_;
    }

    TwistedSeries operator+(const TwistedSeries& o) const {
        require_compatible(o);
        TwistedSeries r = *this;
        for (auto& [a, v] : o.c_) r.add(a, v);
        return r;
    }

    TwistedSeries operator-(const TwistedSeries& o) const {
        require_compatible(o);
        TwistedSeries r = *this;
        for (auto& [a, v] : o.c_) r.add(a, Scalar(0) - v);
        return r;
    }

    TwistedSeries operator*(const TwistedSeries& o) const {
        require_compatible(o);
        TwistedSeries r(chi_op_, trunc_, zeta_);
        for (auto& [a, va] : c_)
            for (auto& [b, vb] : o.c_) {
                if (total_dim(a) + total_dim(b) > trunc_) continue;
                r.add(dim_sum(a, b), zeta_pow(chi_op_eval(a, b)) * va * vb);
            }
        return r;
    }

    bool operator==(const TwistedSeries& o) const { return compatible(o) && c_ == o.c_; }
    bool operator!=(const TwistedSeries& o) const { return !(*this == o); }

    static TwistedSeries unit(std::vector<std::vector<long>> chi_op, int trunc, Scalar zeta) {
        TwistedSeries r(std::move(chi_op), trunc, std::move(zeta));
        r.add(DimVec(r.chi_op_.size(), 0), Scalar(1));
        return r;
    }

    Scalar zeta_pow(long e) const {
        Scalar r(1);
        if (e >= 0)
            for (long i = 0; i < e; ++i) r = r * zeta_;
        else
            for (long i = 0; i < -e; ++i) r = r / zeta_;
        return r;
    }

  private:
    void require_compatible(const TwistedSeries& o) const {
        if (!compatible(o))
            throw ValidationError("twisted series: mismatched contexts (chi_op/truncation/base)");
    }

    std::vector<std::vector<long>> chi_op_;
    int trunc_;
    Scalar zeta_;
    std::map<DimVec, Scalar> c_;
};

using CountingSeries = TwistedSeries<Rational>;
using MotivicSeries = TwistedSeries<MotivicScalar>;

}  // namespace hallq
