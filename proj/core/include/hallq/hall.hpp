#pragma once

#include <map>

#include "hallq/quiver_rep.hpp"

namespace hallq {

/// Finitely supported Q-valued function on iso classes of rep_{F_q}(Q);
/// element of the Ringel-Hall algebra H(E). Keys are canonical class keys
/// of the owning context; no zero coefficients are stored.
class HallElement {
  public:
    explicit HallElement(const QuiverRepContext& ctx) : ctx_(&ctx) {}

    const QuiverRepContext& ctx() const { return *ctx_; }
    const std::map<std::string, Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    void add(const std::string& class_key, const Rational& v) {
        auto it = c_.find(class_key);
        Rational nv = (it == c_.end() ? Rational(0) : it->second) + v;
        if (nv == 0) {
            if (it != c_.end()) c_.erase(it);
        } else {
            c_[class_key] = nv;
        }
    }

    Rational coeff(const std::string& class_key) const {
        auto it = c_.find(class_key);
        return it == c_.end() ? Rational(0) : it->second;
    }

    HallElement operator+(const HallElement& o) const;
    HallElement operator-(const HallElement& o) const;
    HallElement times(const Rational& s) const;
    bool operator==(const HallElement& o) const { return c_ == o.c_; }

    /// Indicator function of the iso class of r.
    static HallElement indicator(const QuiverRepContext& ctx, const QuiverRep& r);
    /// Unit: indicator of the zero object.
    static HallElement unit(const QuiverRepContext& ctx);

  private:
    const QuiverRepContext* ctx_;
    std::map<std::string, Rational> c_;
};

/// Convolution product (phi * psi)(E) = sum_{B <= E} phi(B) psi(E/B):
/// the first factor is evaluated on the subobject. Computed by exhaustive
/// subobject enumeration on every class E of compatible dimension vector.
HallElement hall_product(const HallElement& phi, const HallElement& psi);

/// Class key / dim lookup helpers shared by products and integration.
DimVec class_key_dim(const QuiverRepContext& ctx, const std::string& key);

}  // namespace hallq
