#pragma once

#include <map>
#include <string>
#include <vector>

#include "hallq/rational.hpp"

namespace hallq {

/// Univariate polynomial over Z in the Lefschetz variable (written L or t,
/// depending on context). Sparse map from exponent to coefficient, zero
/// coefficients never stored. degree() of the zero polynomial is -1.
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(int c) { set(0, Int(c)); }
    explicit IntPoly(const Int& c) { set(0, c); }

    static IntPoly variable() { return monomial(1, 1); }
    static IntPoly monomial(int exp, const Int& c) {
        IntPoly p;
        p.set(exp, c);
        return p;
    }
    /// t^n - 1
    static IntPoly tn_minus_1(int n) {
        IntPoly p = monomial(n, 1);
        p.set(0, p.coeff(0) - 1);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    int low_degree() const { return c_.empty() ? -1 : c_.begin()->first; }
    Int coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? Int(0) : it->second;
    }
    Int leading() const { return c_.empty() ? Int(0) : c_.rbegin()->second; }
    const std::map<int, Int>& coeffs() const { return c_; }

    void set(int exp, const Int& v) {
        if (exp < 0) throw ValidationError("IntPoly: negative exponent");
        if (v == 0)
            c_.erase(exp);
        else
            c_[exp] = v;
    }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }
    /// Total order (by coefficient maps); used for canonical choices only.
    bool operator<(const IntPoly& o) const { return c_ < o.c_; }

    IntPoly times(const Int& k) const;
    /// Multiply by t^k (k >= 0), or divide exactly by t^-k (k < 0).
    IntPoly shift(int k) const;
    IntPoly pow(int e) const;

    /// Exact division; throws ConsistencyError when not exact.
    IntPoly div_exact(const IntPoly& d) const;
    bool divides(const IntPoly& d) const;

    /// gcd of all coefficients (0 for the zero polynomial), sign of leading.
    Int content() const;
    IntPoly primitive_part() const;

    Int evaluate(const Int& x) const;
    Rational evaluate(const Rational& x) const;

    /// Coefficient symmetry p(t) == t^deg p(1/t).
    bool is_palindromic() const;

    std::string to_string(const std::string& var = "t") const;

  private:
    std::map<int, Int> c_;
};

/// Polynomial gcd over Z by primitive pseudo-remainder sequences; result has
/// positive leading coefficient and includes the gcd of contents.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

}  // namespace hallq
