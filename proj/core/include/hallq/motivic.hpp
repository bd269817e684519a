#pragma once

#include <string>
#include <vector>

#include "hallq/int_poly.hpp"

namespace hallq {

/// Element of the localized ring Z[L][(c * L^a * prod(L^n - 1))^-1], stored
/// as a normalized fraction of integer polynomials. Canonical form: gcd of
/// numerator and denominator is 1 (including integer content), denominator
/// has positive leading coefficient and admissible shape. Equality is
/// syntactic equality of the normal forms.
class MotivicScalar {
  public:
    MotivicScalar() : num_(), den_(1) {}
    MotivicScalar(int c) : num_(c), den_(1) {}
    explicit MotivicScalar(const IntPoly& p) : num_(p), den_(1) {}
    MotivicScalar(const IntPoly& num, const IntPoly& den);
    explicit MotivicScalar(const Rational& r);

    static MotivicScalar lefschetz() { return MotivicScalar(IntPoly::variable()); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0 && den_.coeff(0) == 1; }
    /// Numerator of a scalar with denominator 1; throws otherwise.
    IntPoly as_polynomial() const;
    bool is_rational_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }
    Rational as_rational_constant() const;

    MotivicScalar operator-() const;
    MotivicScalar operator+(const MotivicScalar& o) const;
    MotivicScalar operator-(const MotivicScalar& o) const;
    MotivicScalar operator*(const MotivicScalar& o) const;
    MotivicScalar operator/(const MotivicScalar& o) const;
    MotivicScalar& operator+=(const MotivicScalar& o) { return *this = *this + o; }
    MotivicScalar& operator-=(const MotivicScalar& o) { return *this = *this - o; }
    MotivicScalar& operator*=(const MotivicScalar& o) { return *this = *this * o; }
    MotivicScalar& operator/=(const MotivicScalar& o) { return *this = *this / o; }
    bool operator==(const MotivicScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const MotivicScalar& o) const { return !(*this == o); }

    MotivicScalar pow(int e) const;
    /// L^e for e of either sign.
    static MotivicScalar lefschetz_pow(int e);

    /// Substitute L = q, q >= 2. Evaluation where the denominator vanishes
    /// (only q in {0, +-1} can occur for admissible denominators) is a
    /// domain error.
    Rational evaluate(const Int& q) const;

    std::string to_string(const std::string& var = "L") const;

  private:
    void normalize();
    IntPoly num_, den_;
};

/// [GL_N] = L^(N(N-1)/2) * prod_{n=1..N} (L^n - 1).
MotivicScalar gl_class(int N);

/// (t^r-1)...(t-1) / prod_i (t^{d_i}-1)...(t-1); division is exact.
/// Entries of delta must be positive and sum to r.
IntPoly gaussian_multinomial(int r, const std::vector<int>& delta);

/// Order of the standard parabolic of block type delta in GL_r, as a
/// polynomial class: L^{sum_{i<j} d_i d_j} * prod_i [GL_{d_i}].
/// Zero entries in delta are allowed and contribute trivially.
MotivicScalar parabolic_order_class(const std::vector<int>& delta);

/// Checks that den divides c * L^a * prod (L^n - 1); throws ValidationError
/// otherwise. Returns normally for admissible denominators.
void check_denominator_shape(const IntPoly& den);

}  // namespace hallq
