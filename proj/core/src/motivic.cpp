#include "hallq/motivic.hpp"

namespace hallq {

MotivicScalar::MotivicScalar(const IntPoly& num, const IntPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw ValidationError("MotivicScalar: zero denominator");
    normalize();
    check_denominator_shape(den_);
}

MotivicScalar::MotivicScalar(const Rational& r)
    : num_(IntPoly(boost::multiprecision::numerator(r))),
      den_(IntPoly(boost::multiprecision::denominator(r))) {}

void MotivicScalar::normalize() {
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = poly_gcd(num_, den_);
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

IntPoly MotivicScalar::as_polynomial() const {
    if (!is_polynomial()) throw ValidationError("MotivicScalar: not a polynomial: " + to_string());
    return num_;
}

Rational MotivicScalar::as_rational_constant() const {
    if (!is_rational_constant())
        throw ValidationError("MotivicScalar: not a rational constant: " + to_string());
    return Rational(num_.coeff(0), den_.coeff(0));
}

MotivicScalar MotivicScalar::operator-() const {
    MotivicScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

MotivicScalar MotivicScalar::operator+(const MotivicScalar& o) const {
    return MotivicScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

MotivicScalar MotivicScalar::operator-(const MotivicScalar& o) const {
    return MotivicScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

MotivicScalar MotivicScalar::operator*(const MotivicScalar& o) const {
    return MotivicScalar(num_ * o.num_, den_ * o.den_);
}

MotivicScalar MotivicScalar::operator/(const MotivicScalar& o) const {
    if (o.is_zero()) throw ValidationError("MotivicScalar: division by zero");
    return MotivicScalar(num_ * o.den_, den_ * o.num_);
}

MotivicScalar MotivicScalar::pow(int e) const {
    if (e >= 0) return MotivicScalar(num_.pow(e), den_.pow(e));
    if (is_zero()) throw ValidationError("MotivicScalar: negative power of zero");
    return MotivicScalar(den_.pow(-e), num_.pow(-e));
}

MotivicScalar MotivicScalar::lefschetz_pow(int e) {
    return e >= 0 ? MotivicScalar(IntPoly::monomial(e, 1))
                  : MotivicScalar(IntPoly(1), IntPoly::monomial(-e, 1));
}

Rational MotivicScalar::evaluate(const Int& q) const {
    Int d = den_.evaluate(q);
    if (d == 0)
        throw ValidationError("MotivicScalar: denominator vanishes at L = " + q.str());
    return Rational(num_.evaluate(q), d);
}

std::string MotivicScalar::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    std::string n = num_.to_string(var);
    if (num_.coeffs().size() > 1) n = "(" + n + ")";
    std::string d = den_.to_string(var);
    if (den_.coeffs().size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

void check_denominator_shape(const IntPoly& den) {
    if (den.is_zero()) throw ValidationError("MotivicScalar: zero denominator");
    IntPoly p = den.primitive_part();
    // strip powers of L
    int lo = p.low_degree();
    if (lo > 0) p = p.shift(-lo);
    // strip divisors of L^n - 1; any admissible factor of degree d divides
    // some L^n - 1 with n well below the scan bound
    int n_max = 3 * den.degree() + 6;
    for (int n = 1; n <= n_max && p.degree() > 0; ++n) {
        for (;;) {
            IntPoly g = poly_gcd(p, IntPoly::tn_minus_1(n));
            if (g.degree() < 1) break;
            p = p.div_exact(g);
        }
    }
    if (p.degree() > 0)
        throw ValidationError("MotivicScalar: denominator not of shape c*L^a*prod(L^n-1): " +
                              den.to_string());
}

MotivicScalar gl_class(int N) {
    if (N < 0) throw ValidationError("gl_class: negative N");
    IntPoly p = IntPoly::monomial(N * (N - 1) / 2, 1);
    for (int n = 1; n <= N; ++n) p *= IntPoly::tn_minus_1(n);
    return MotivicScalar(p);
}

IntPoly gaussian_multinomial(int r, const std::vector<int>& delta) {
    int sum = 0;
    for (int d : delta) {
        if (d <= 0) throw ValidationError("gaussian_multinomial: delta entries must be positive");
        sum += d;
    }
    if (sum != r) throw ValidationError("gaussian_multinomial: delta must sum to r");
    IntPoly num(1);
    for (int n = 1; n <= r; ++n) num *= IntPoly::tn_minus_1(n);
    for (int d : delta)
        for (int n = 1; n <= d; ++n) num = num.div_exact(IntPoly::tn_minus_1(n));
    return num;
}

MotivicScalar parabolic_order_class(const std::vector<int>& delta) {
    int cross = 0;
    for (size_t i = 0; i < delta.size(); ++i)
        for (size_t j = i + 1; j < delta.size(); ++j) cross += delta[i] * delta[j];
    MotivicScalar r = MotivicScalar::lefschetz_pow(cross);
    for (int d : delta) r *= gl_class(d);
    return r;
}

}  // namespace hallq
