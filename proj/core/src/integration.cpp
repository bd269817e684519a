#include "hallq/integration.hpp"

#include <sstream>

namespace hallq {

MotivicScalar motivic_class_total(const Quiver& Q, const DimVec& alpha) {
    Q.validate();
    require_effective(alpha);
    if (static_cast<int>(alpha.size()) != Q.num_vertices())
        throw ValidationError("motivic_class_total: dim vector length mismatch");
    int e = 0;
    for (auto& [s, t] : Q.arrows) e += alpha[s] * alpha[t];
    MotivicScalar r = MotivicScalar::lefschetz_pow(e);
    for (int d : alpha) r /= gl_class(d);
    return r;
}

CountingSeries integrate_counting(const HallElement& phi, int trunc) {
    const QuiverRepContext& ctx = phi.ctx();
    CountingSeries out(ctx.chi_op_matrix(), trunc, Rational(1, ctx.q()));
    for (auto& [key, v] : phi.coeffs()) {
        DimVec alpha = class_key_dim(ctx, key);
        // #Aut from the iso-class table (brute-force orbit enumeration)
        Int aut = 0;
        for (auto& cls : ctx.iso_classes(alpha))
            if (cls.rep.byte_key() == key) {
                aut = cls.aut_order;
                break;
            }
        if (aut == 0) throw ValidationError("integrate_counting: unknown class key");
        out.add(alpha, v / Rational(aut));
    }
    return out;
}

namespace {

std::string series_str(const CountingSeries& s) {
    std::ostringstream os;
    if (s.coeffs().empty()) return "0";
    bool first = true;
    for (auto& [a, v] : s.coeffs()) {
        os << (first ? "" : " + ") << rational_to_string(v) << "*T^" << dim_to_string(a);
        first = false;
    }
    return os.str();
}

}  // namespace

CheckReport verify_integration_morphism(const QuiverRepContext& ctx, int bound) {
    CheckReport rep;
    rep.identity = "integration morphism (algebra map into the twisted group ring)";
    DimVec cap(ctx.quiver().num_vertices(), bound);
    std::vector<std::pair<std::string, QuiverRep>> basis;
    basis.emplace_back(ctx.class_key(ctx.zero_object()), ctx.zero_object());
    for (auto& d : effective_vectors_below(cap)) {
        if (total_dim(d) > bound) continue;
        for (auto& cls : ctx.iso_classes(d)) basis.emplace_back(cls.rep.byte_key(), cls.rep);
    }
    for (auto& [ka, A] : basis)
        for (auto& [kb, B] : basis) {
            if (total_dim(A.dim) + total_dim(B.dim) > bound) continue;
            HallElement ia = HallElement::indicator(ctx, A);
            HallElement ib = HallElement::indicator(ctx, B);
            CountingSeries lhs = integrate_counting(hall_product(ia, ib), bound);
            CountingSeries rhs = integrate_counting(ia, bound) * integrate_counting(ib, bound);
            std::ostringstream label;
            label << "A=" << dim_to_string(A.dim) << "#" << ctx.class_index(A)
                  << " B=" << dim_to_string(B.dim) << "#" << ctx.class_index(B);
            rep.add(label.str(), series_str(lhs), series_str(rhs), lhs == rhs);
        }
    return rep;
}

CheckReport riedtmann_fibre_check(const QuiverRepContext& ctx, const QuiverRep& A,
                                  const QuiverRep& B) {
    CheckReport rep;
    rep.identity = "Riedtmann fibre formula (counting shadow)";
    std::string ka = ctx.class_key(A), kb = ctx.class_key(B);
    DimVec delta = dim_sum(A.dim, B.dim);
    Rational lhs = 0;
    for (auto& cls : ctx.iso_classes(delta)) {
        Int g = 0;
        for (auto& sq : ctx.subobjects(cls.rep))
            if (ctx.class_key(sq.sub) == ka && ctx.class_key(sq.quot) == kb) ++g;
        if (g != 0) lhs += Rational(g, cls.aut_order);
    }
    long e = ctx.ext1_dim(B, A) - ctx.hom_dim(B, A);
    Rational rhs = rational_pow(Rational(ctx.q()), static_cast<int>(e)) /
                   Rational(ctx.aut_order(A) * ctx.aut_order(B));
    std::ostringstream label;
    label << "A=" << dim_to_string(A.dim) << "#" << ctx.class_index(A)
          << " B=" << dim_to_string(B.dim) << "#" << ctx.class_index(B);
    rep.add(label.str(), rational_to_string(lhs), rational_to_string(rhs), lhs == rhs);
    return rep;
}

CheckReport verify_hall_associativity(const QuiverRepContext& ctx, int bound) {
    CheckReport rep;
    rep.identity = "Hall product associativity";
    DimVec cap(ctx.quiver().num_vertices(), bound);
    std::vector<QuiverRep> basis;
    for (auto& d : effective_vectors_below(cap)) {
        if (total_dim(d) > bound) continue;
        for (auto& cls : ctx.iso_classes(d)) basis.push_back(cls.rep);
    }
    basis.push_back(ctx.zero_object());
    for (auto& A : basis)
        for (auto& B : basis)
            for (auto& C : basis) {
                if (total_dim(A.dim) + total_dim(B.dim) + total_dim(C.dim) > bound) continue;
                HallElement a = HallElement::indicator(ctx, A);
                HallElement b = HallElement::indicator(ctx, B);
                HallElement c = HallElement::indicator(ctx, C);
                HallElement lhs = hall_product(hall_product(a, b), c);
                HallElement rhs = hall_product(a, hall_product(b, c));
                std::ostringstream label;
                label << dim_to_string(A.dim) << "#" << ctx.class_index(A) << " * "
                      << dim_to_string(B.dim) << "#" << ctx.class_index(B) << " * "
                      << dim_to_string(C.dim) << "#" << ctx.class_index(C);
                rep.add(label.str(), std::to_string(lhs.coeffs().size()) + " terms",
                        std::to_string(rhs.coeffs().size()) + " terms", lhs == rhs);
            }
    return rep;
}

}  // namespace hallq
