#include "hallq/int_poly.hpp"

#include <sstream>

namespace hallq {

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ValidationError("rational: zero denominator in \"" + s + "\"");
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw ValidationError("rational: cannot parse \"" + s + "\"");
    }
}

IntPoly IntPoly::operator-() const {
    IntPoly r;
    for (auto& [e, v] : c_) r.c_[e] = -v;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r = *this;
    for (auto& [e, v] : o.c_) r.set(e, r.coeff(e) + v);
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r = *this;
    for (auto& [e, v] : o.c_) r.set(e, r.coeff(e) - v);
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    IntPoly r;
    for (auto& [e1, v1] : c_)
        for (auto& [e2, v2] : o.c_) r.set(e1 + e2, r.coeff(e1 + e2) + v1 * v2);
    return r;
}

IntPoly IntPoly::times(const Int& k) const {
    IntPoly r;
    if (k == 0) return r;
    for (auto& [e, v] : c_) r.c_[e] = v * k;
    return r;
}

IntPoly IntPoly::shift(int k) const {
    IntPoly r;
    for (auto& [e, v] : c_) {
        if (e + k < 0) throw ConsistencyError("IntPoly::shift: inexact");
        r.c_[e + k] = v;
    }
    return r;
}

IntPoly IntPoly::pow(int e) const {
    if (e < 0) throw ValidationError("IntPoly::pow: negative exponent");
    IntPoly r(1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

IntPoly IntPoly::div_exact(const IntPoly& d) const {
    if (d.is_zero()) throw ValidationError("IntPoly: division by zero");
    IntPoly rem = *this, quot;
    Int dl = d.leading();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        Int rl = rem.leading();
        if (rl % dl != 0) throw ConsistencyError("IntPoly: inexact division");
        int e = rem.degree() - d.degree();
        Int c = rl / dl;
        quot.set(e, c);
        rem -= d.shift(e).times(c);
    }
    if (!rem.is_zero()) throw ConsistencyError("IntPoly: inexact division (remainder)");
    return quot;
}

bool IntPoly::divides(const IntPoly& d) const {
    try {
        (void)div_exact(d);
        return true;
    } catch (const ConsistencyError&) {
        return false;
    }
}

Int IntPoly::content() const {
    Int g = 0;
    for (auto& [e, v] : c_) g = boost::multiprecision::gcd(g, v);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return *this;
    Int g = content();
    if (leading() < 0) g = -g;
    IntPoly r;
    for (auto& [e, v] : c_) r.c_[e] = v / g;
    return r;
}

Int IntPoly::evaluate(const Int& x) const {
    Int acc = 0;
    int last = degree();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= int_pow(x, last - it->first);
        acc += it->second;
        last = it->first;
    }
    return acc * int_pow(x, last < 0 ? 0 : last);
}

Rational IntPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto& [e, v] : c_) acc += Rational(v) * rational_pow(x, e);
    return acc;
}

bool IntPoly::is_palindromic() const {
    if (is_zero()) return true;
    int d = degree(), lo = low_degree();
    for (int e = lo; e <= d; ++e)
        if (coeff(e) != coeff(d + lo - e)) return false;
    return true;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Int v = it->second;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        Int a = boost::multiprecision::abs(v);
        int e = it->first;
        if (e == 0)
            os << a.str();
        else {
            if (a != 1) os << a.str() << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return b.leading() < 0 ? -b : b;
    if (b.is_zero()) return a.leading() < 0 ? -a : a;
    Int cont = boost::multiprecision::gcd(a.content(), b.content());
    IntPoly x = a.primitive_part(), y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        // pseudo-remainder of x by y
        IntPoly rem = x;
        Int yl = y.leading();
        while (!rem.is_zero() && rem.degree() >= y.degree()) {
            rem = rem.times(yl) - y.shift(rem.degree() - y.degree()).times(rem.leading());
        }
        x = y;
        y = rem.is_zero() ? IntPoly() : rem.primitive_part();
    }
    IntPoly g = x.primitive_part().times(cont);
    if (g.leading() < 0) g = -g;
    return g;
}

}  // namespace hallq
