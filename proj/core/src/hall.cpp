#include "hallq/hall.hpp"

#include <set>

namespace hallq {

HallElement HallElement::operator+(const HallElement& o) const {
    if (ctx_ != o.ctx_) throw ValidationError("hall: mixed contexts");
    HallElement r = *this;
    for (auto& [k, v] : o.c_) r.add(k, v);
    return r;
}

HallElement HallElement::operator-(const HallElement& o) const {
    if (ctx_ != o.ctx_) throw ValidationError("hall: mixed contexts");
    HallElement r = *this;
    for (auto& [k, v] : o.c_) r.add(k, -v);
    return r;
}

HallElement HallElement::times(const Rational& s) const {
    HallElement r(*ctx_);
    if (s == 0) return r;
    for (auto& [k, v] : c_) r.add(k, v * s);
    return r;
}

HallElement HallElement::indicator(const QuiverRepContext& ctx, const QuiverRep& r) {
    HallElement e(ctx);
    e.add(ctx.class_key(r), Rational(1));
    return e;
}

HallElement HallElement::unit(const QuiverRepContext& ctx) {
    return indicator(ctx, ctx.zero_object());
}

DimVec class_key_dim(const QuiverRepContext& ctx, const std::string& key) {
    int nv = ctx.quiver().num_vertices();
    if (static_cast<int>(key.size()) < nv) throw ValidationError("hall: malformed class key");
    DimVec d(nv);
    for (int i = 0; i < nv; ++i) d[i] = static_cast<unsigned char>(key[i]);
    return d;
}

HallElement hall_product(const HallElement& phi, const HallElement& psi) {
    if (&phi.ctx() != &psi.ctx()) throw ValidationError("hall_product: mixed contexts");
    const QuiverRepContext& ctx = phi.ctx();
    HallElement out(ctx);
    std::set<DimVec> targets;
    for (auto& [ka, va] : phi.coeffs())
        for (auto& [kb, vb] : psi.coeffs())
            targets.insert(dim_sum(class_key_dim(ctx, ka), class_key_dim(ctx, kb)));
    for (auto& delta : targets) {
        for (auto& cls : ctx.iso_classes(delta)) {
            Rational acc = 0;
            for (auto& sq : ctx.subobjects(cls.rep)) {
                Rational a = phi.coeff(ctx.class_key(sq.sub));
                if (a == 0) continue;
                Rational b = psi.coeff(ctx.class_key(sq.quot));
                if (b == 0) continue;
                acc += a * b;
            }
            if (acc != 0) out.add(cls.rep.byte_key(), acc);
        }
    }
    return out;
}

}  // namespace hallq
