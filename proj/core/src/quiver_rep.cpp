#include "hallq/quiver_rep.hpp"

#include <algorithm>

namespace hallq {

void QuiverRep::validate(const Quiver& Q) const {
    require_prime_field(q);
    if (static_cast<int>(dim.size()) != Q.num_vertices())
        throw ValidationError("rep: dim vector length does not match quiver");
    require_effective(dim);
    if (mats.size() != Q.arrows.size())
        throw ValidationError("rep: one matrix per arrow required");
    for (size_t e = 0; e < mats.size(); ++e) {
        auto [s, t] = Q.arrows[e];
        if (mats[e].rows != dim[t] || mats[e].cols != dim[s])
            throw ValidationError("rep: matrix shape mismatch on arrow " + std::to_string(e));
        for (auto v : mats[e].a)
            if (v >= q) throw ValidationError("rep: entry not reduced mod q");
    }
}

std::string QuiverRep::byte_key() const {
    std::string k;
    for (int d : dim) k += static_cast<char>(d);
    for (auto& m : mats)
        for (auto v : m.a) k += static_cast<char>(v);
    return k;
}

QuiverRepContext::QuiverRepContext(Quiver Q, int q, Budget budget)
    : Q_(std::move(Q)), q_(q), budget_(budget) {
    Q_.validate();
    require_prime_field(q_);
}

void QuiverRepContext::check_context(const QuiverRep& r) const {
    if (r.q != q_) throw ValidationError("rep context mismatch: different field size");
    r.validate(Q_);
}

Int QuiverRepContext::variety_point_count(const DimVec& alpha) const {
    Int e = 0;
    for (auto& [s, t] : Q_.arrows) e += Int(alpha[s]) * alpha[t];
    // e is the F_q-dimension of the representation variety
    Int r = 1;
    Int steps = e;
    for (Int i = 0; i < steps; ++i) r *= q_;
    return r;
}

Int QuiverRepContext::gl_alpha_order(const DimVec& alpha) const {
    Int r = 1;
    for (int d : alpha) r *= gl_order(d, q_);
    return r;
}

namespace {

// Apply g = (g_i) in GL_alpha to the matrix tuple: M_e -> g_t M_e g_s^{-1}.
std::vector<FqMat> act(const Quiver& Q, const std::vector<FqMat>& gs,
                       const std::vector<FqMat>& gs_inv, const std::vector<FqMat>& mats, int p) {
    std::vector<FqMat> out;
    out.reserve(mats.size());
    for (size_t e = 0; e < mats.size(); ++e) {
        auto [s, t] = Q.arrows[e];
        out.push_back(mat_mul(gs[t], mat_mul(mats[e], gs_inv[s], p), p));
    }
    return out;
}

std::string mats_key(const std::vector<FqMat>& mats) {
    std::string k;
    for (auto& m : mats)
        for (auto v : m.a) k += static_cast<char>(v);
    return k;
}

// Iterate over GL_alpha as tuples of indices into per-vertex GL lists.
struct GlAlphaIter {
    std::vector<const std::vector<FqMat>*> groups;
    std::vector<size_t> idx;
    bool done = false;

    explicit GlAlphaIter(std::vector<const std::vector<FqMat>*> gs)
        : groups(std::move(gs)), idx(groups.size(), 0) {}

    std::vector<FqMat> current() const {
        std::vector<FqMat> out;
        out.reserve(groups.size());
        for (size_t i = 0; i < groups.size(); ++i) out.push_back((*groups[i])[idx[i]]);
        return out;
    }
    void advance() {
        for (size_t i = 0; i < groups.size(); ++i) {
            if (++idx[i] < groups[i]->size()) return;
            idx[i] = 0;
        }
        done = true;
    }
};

}  // namespace

const std::vector<QuiverRepContext::IsoClass>& QuiverRepContext::iso_classes(
    const DimVec& alpha) const {
    require_effective(alpha);
    if (static_cast<int>(alpha.size()) != Q_.num_vertices())
        throw ValidationError("iso_classes: dim vector length mismatch");
    auto it = table_cache_.find(alpha);
    if (it != table_cache_.end()) return it->second;

    Int points = variety_point_count(alpha);
    if (points > Int(budget_.limit()))
        throw BudgetError("iso_classes: q^{dim V} = " + points.str() + " exceeds budget");
    std::int64_t npoints = points.convert_to<std::int64_t>();
    budget_.charge(npoints, "iso_classes");

    std::vector<const std::vector<FqMat>*> gls;
    for (int d : alpha) gls.push_back(&general_linear_group(d, q_, budget_));

    // enumerate all matrix tuples in lex byte order
    std::vector<std::pair<int, int>> shapes;
    for (auto& [s, t] : Q_.arrows) shapes.emplace_back(alpha[t], alpha[s]);
    size_t entries = 0;
    for (auto& [r, c] : shapes) entries += static_cast<size_t>(r) * c;

    std::map<std::string, int> seen;  // point key -> class index
    std::vector<IsoClass> classes;
    std::vector<int> digits(entries, 0);
    Int gl_total = gl_alpha_order(alpha);

    for (std::int64_t cnt = 0; cnt < npoints; ++cnt) {
        std::vector<FqMat> mats;
        size_t off = 0;
        for (auto& [r, c] : shapes) {
            FqMat m(r, c);
            for (size_t i = 0; i < m.a.size(); ++i) m.a[i] = static_cast<std::uint8_t>(digits[off + i]);
            off += m.a.size();
            mats.push_back(std::move(m));
        }
        std::string key = mats_key(mats);
        if (!seen.count(key)) {
            // new orbit: sweep GL_alpha, recording the orbit and stabilizer
            std::map<std::string, std::vector<FqMat>> orbit;
            Int stab = 0;
            GlAlphaIter gi(gls);
            budget_.charge(gl_total.convert_to<std::int64_t>(), "iso_classes orbit");
            while (!gi.done) {
                auto gs = gi.current();
                std::vector<FqMat> gs_inv;
                gs_inv.reserve(gs.size());
                for (auto& g : gs) gs_inv.push_back(mat_inverse(g, q_));
                auto img = act(Q_, gs, gs_inv, mats, q_);
                std::string ik = mats_key(img);
                if (ik == key) ++stab;
                orbit.emplace(std::move(ik), std::move(img));
                gi.advance();
            }
            QuiverRep rep{q_, alpha, orbit.begin()->second};  // lex-minimal
            int ci = static_cast<int>(classes.size());
            classes.push_back(IsoClass{rep, stab, gl_total / stab});
            for (auto& [k2, _] : orbit) seen.emplace(k2, ci);
        }
        // plain odometer (order of enumeration does not matter for completeness)
        bool carried = false;
        for (size_t i = 0; i < entries; ++i) {
            if (++digits[i] < q_) {
                carried = true;
                break;
            }
            digits[i] = 0;
        }
        if (!carried && cnt + 1 < npoints && entries > 0)
            throw ConsistencyError("iso_classes: enumeration underflow");
    }

    // orbit-sum identity: sum of orbit sizes covers the whole variety
    Int total = 0;
    for (auto& c : classes) total += c.orbit_size;
    if (total != points)
        throw ConsistencyError("iso_classes: orbit sizes sum to " + total.str() + " != " +
                               points.str());

    std::sort(classes.begin(), classes.end(),
              [](const IsoClass& a, const IsoClass& b) { return a.rep.byte_key() < b.rep.byte_key(); });
    return table_cache_.emplace(alpha, std::move(classes)).first->second;
}

QuiverRep QuiverRepContext::canonical_form(const QuiverRep& r) const {
    check_context(r);
    auto key = r.byte_key();
    auto it = canon_cache_.find(key);
    if (it != canon_cache_.end()) return it->second.first;

    std::vector<const std::vector<FqMat>*> gls;
    for (int d : r.dim) gls.push_back(&general_linear_group(d, q_, budget_));
    Int gl_total = gl_alpha_order(r.dim);
    budget_.charge(gl_total.convert_to<std::int64_t>(), "canonical_form");

    std::string best;
    std::vector<FqMat> best_mats;
    Int stab = 0;
    std::string self = mats_key(r.mats);
    GlAlphaIter gi(gls);
    while (!gi.done) {
        auto gs = gi.current();
        std::vector<FqMat> gs_inv;
        for (auto& g : gs) gs_inv.push_back(mat_inverse(g, q_));
        auto img = act(Q_, gs, gs_inv, r.mats, q_);
        std::string ik = mats_key(img);
        if (ik == self) ++stab;
        if (best.empty() || ik < best) {
            best = ik;
            best_mats = img;
        }
        gi.advance();
    }
    QuiverRep canon{q_, r.dim, best_mats};
    canon_cache_.emplace(key, std::make_pair(canon, stab));
    return canon;
}

Int QuiverRepContext::aut_order(const QuiverRep& r) const {
    canonical_form(r);
    return canon_cache_.at(r.byte_key()).second;
}

int QuiverRepContext::class_index(const QuiverRep& r) const {
    auto canon = canonical_form(r);
    auto& table = iso_classes(r.dim);
    for (size_t i = 0; i < table.size(); ++i)
        if (table[i].rep.byte_key() == canon.byte_key()) return static_cast<int>(i);
    throw ConsistencyError("class_index: canonical form not found in table");
}

std::string QuiverRepContext::class_key(const QuiverRep& r) const {
    return canonical_form(r).byte_key();
}

std::vector<QuiverRepContext::SubQuot> QuiverRepContext::subobjects(const QuiverRep& E) const {
    check_context(E);
    int nv = Q_.num_vertices();
    // per-vertex subspace lists, all dimensions
    std::vector<std::vector<FqMat>> per_vertex(nv);
    Int combos = 1;
    for (int v = 0; v < nv; ++v) {
        for (int k = 0; k <= E.dim[v]; ++k) {
            auto s = subspaces(E.dim[v], k, q_, budget_);
            per_vertex[v].insert(per_vertex[v].end(), s.begin(), s.end());
        }
        combos *= static_cast<int>(per_vertex[v].size());
    }
    budget_.charge(combos.convert_to<std::int64_t>(), "subobjects");

    std::vector<SubQuot> out;
    std::vector<size_t> idx(nv, 0);
    for (;;) {
        std::vector<FqMat> bases;
        for (int v = 0; v < nv; ++v) bases.push_back(per_vertex[v][idx[v]]);
        // arrow closure: M_e * U_s contained in U_t
        bool closed = true;
        for (size_t e = 0; e < Q_.arrows.size() && closed; ++e) {
            auto [s, t] = Q_.arrows[e];
            if (bases[s].cols == 0) continue;
            FqMat img = mat_mul(E.mats[e], bases[s], q_);
            closed = subspace_contained(img, bases[t], q_);
        }
        if (closed) {
            SubQuot sq;
            sq.sub_bases = bases;
            sq.sub = induced_sub(E, bases);
            // quotient: complete each basis, express maps on complement coords
            std::vector<FqMat> proj(nv);   // quotient coordinate maps (rows)
            std::vector<FqMat> compl_basis(nv);
            for (int v = 0; v < nv; ++v) {
                int n = E.dim[v], k = bases[v].cols;
                // complement: greedily extend by standard vectors
                FqMat full = bases[v];
                FqMat comp(n, n - k);
                int got = 0;
                for (int j = 0; j < n && got < n - k; ++j) {
                    std::vector<std::uint8_t> ev(n, 0);
                    ev[j] = 1;
                    if (!in_column_space(full, ev, q_)) {
                        FqMat evm(n, 1);
                        evm.at(j, 0) = 1;
                        full = mat_hcat(full, evm);
                        for (int i = 0; i < n; ++i) comp.at(i, got) = ev[i];
                        ++got;
                    }
                }
                compl_basis[v] = comp;
                // P = [bases | comp] invertible; quotient coords = last n-k rows of P^-1
                FqMat P = mat_hcat(bases[v], comp);
                FqMat Pinv = mat_inverse(P, q_);
                FqMat pr(n - k, n);
                for (int i = 0; i < n - k; ++i)
                    for (int j = 0; j < n; ++j) pr.at(i, j) = Pinv.at(k + i, j);
                proj[v] = pr;
            }
            QuiverRep quot;
            quot.q = q_;
            quot.dim.resize(nv);
            for (int v = 0; v < nv; ++v) quot.dim[v] = E.dim[v] - bases[v].cols;
            for (size_t e = 0; e < Q_.arrows.size(); ++e) {
                auto [s, t] = Q_.arrows[e];
                quot.mats.push_back(mat_mul(proj[t], mat_mul(E.mats[e], compl_basis[s], q_), q_));
            }
            sq.quot = std::move(quot);
            out.push_back(std::move(sq));
        }
        // odometer
        int v = 0;
        while (v < nv && ++idx[v] == per_vertex[v].size()) idx[v++] = 0;
        if (v == nv) break;
    }
    return out;
}

QuiverRep QuiverRepContext::induced_sub(const QuiverRep& E, const std::vector<FqMat>& bases) const {
    QuiverRep sub;
    sub.q = q_;
    sub.dim.resize(Q_.num_vertices());
    for (int v = 0; v < Q_.num_vertices(); ++v) sub.dim[v] = bases[v].cols;
    for (size_t e = 0; e < Q_.arrows.size(); ++e) {
        auto [s, t] = Q_.arrows[e];
        FqMat m(bases[t].cols, bases[s].cols);
        for (int j = 0; j < bases[s].cols; ++j) {
            std::vector<std::uint8_t> col(E.dim[s]);
            for (int i = 0; i < E.dim[s]; ++i) col[i] = bases[s].at(i, j);
            // image of the j-th basis vector under M_e, in U_t coordinates
            std::vector<std::uint8_t> img(E.dim[t], 0);
            for (int i = 0; i < E.dim[t]; ++i) {
                int acc = 0;
                for (int k = 0; k < E.dim[s]; ++k) acc += E.mats[e].at(i, k) * col[k];
                img[i] = static_cast<std::uint8_t>(acc % q_);
            }
            if (bases[t].cols > 0) {
                auto x = solve_full_rank(bases[t], img, q_);
                for (int i = 0; i < bases[t].cols; ++i) m.at(i, j) = x[i];
            } else {
                for (auto v : img)
                    if (v) throw ValidationError("induced_sub: bases not arrow-closed");
            }
        }
        sub.mats.push_back(std::move(m));
    }
    return sub;
}

QuiverRep QuiverRepContext::conform(QuiverRep r) const {
    if (static_cast<int>(r.dim.size()) != Q_.num_vertices())
        throw ValidationError("rep: dim vector length does not match quiver");
    if (r.mats.size() != Q_.arrows.size())
        throw ValidationError("rep: one matrix per arrow required");
    for (size_t e = 0; e < r.mats.size(); ++e) {
        auto [s, t] = Q_.arrows[e];
        if (r.mats[e].a.empty() && (r.dim[t] == 0 || r.dim[s] == 0))
            r.mats[e] = FqMat(r.dim[t], r.dim[s]);
    }
    check_context(r);
    return r;
}

int QuiverRepContext::hom_dim(const QuiverRep& A, const QuiverRep& B) const {
    check_context(A);
    check_context(B);
    int nv = Q_.num_vertices();
    // unknowns: entries of f_v (B.dim[v] x A.dim[v]); equations per arrow:
    // f_t A_e - B_e f_s = 0
    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + B.dim[v] * A.dim[v];
    int nunk = offset[nv];
    int neq = 0;
    for (auto& [s, t] : Q_.arrows) neq += B.dim[t] * A.dim[s];
    if (nunk == 0) return 0;
    FqMat sys(std::max(neq, 1), nunk);
    int row = 0;
    for (size_t e = 0; e < Q_.arrows.size(); ++e) {
        auto [s, t] = Q_.arrows[e];
        for (int i = 0; i < B.dim[t]; ++i)
            for (int j = 0; j < A.dim[s]; ++j) {
                // (f_t A_e)_{ij} = sum_k f_t[i,k] A_e[k,j]
                for (int k = 0; k < A.dim[t]; ++k)
                    sys.at(row, offset[t] + i * A.dim[t] + k) = static_cast<std::uint8_t>(
                        (sys.at(row, offset[t] + i * A.dim[t] + k) + A.mats[e].at(k, j)) % q_);
                // -(B_e f_s)_{ij} = -sum_k B_e[i,k] f_s[k,j]
                for (int k = 0; k < B.dim[s]; ++k)
                    sys.at(row, offset[s] + k * A.dim[s] + j) = static_cast<std::uint8_t>(
                        (sys.at(row, offset[s] + k * A.dim[s] + j) + (q_ - 1) * B.mats[e].at(i, k)) %
                        q_);
                ++row;
            }
    }
    int rank = neq == 0 ? 0 : mat_rank(sys, q_);
    return nunk - rank;
}

int QuiverRepContext::ext1_dim(const QuiverRep& A, const QuiverRep& B) const {
    long chi = euler_form(A.dim, B.dim);
    long ext = hom_dim(A, B) - chi;
    if (ext < 0) throw ConsistencyError("ext1_dim: negative (hereditary identity violated)");
    return static_cast<int>(ext);
}

long QuiverRepContext::euler_form(const DimVec& x, const DimVec& y) const {
    if (x.size() != y.size() || static_cast<int>(x.size()) != Q_.num_vertices())
        throw ValidationError("euler_form: length mismatch");
    long r = 0;
    for (size_t i = 0; i < x.size(); ++i) r += static_cast<long>(x[i]) * y[i];
    for (auto& [s, t] : Q_.arrows) r -= static_cast<long>(x[s]) * y[t];
    return r;
}

long QuiverRepContext::chi_op(const DimVec& x, const DimVec& y) const { return euler_form(y, x); }

std::vector<std::vector<long>> QuiverRepContext::chi_op_matrix() const {
    int n = Q_.num_vertices();
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 1;
    for (auto& [s, t] : Q_.arrows) c[t][s] -= 1;  // chi_op(x,y) = psi(y,x) = x^T (I - A)^T y
    return c;
}

QuiverRep QuiverRepContext::zero_object() const {
    QuiverRep r;
    r.q = q_;
    r.dim.assign(Q_.num_vertices(), 0);
    for (auto& [s, t] : Q_.arrows) {
        (void)s;
        (void)t;
        r.mats.emplace_back(0, 0);
    }
    return r;
}

QuiverRep QuiverRepContext::simple(int vertex) const {
    if (vertex < 0 || vertex >= Q_.num_vertices())
        throw ValidationError("simple: vertex out of range");
    QuiverRep r;
    r.q = q_;
    r.dim.assign(Q_.num_vertices(), 0);
    r.dim[vertex] = 1;
    for (auto& [s, t] : Q_.arrows) r.mats.emplace_back(r.dim[t], r.dim[s]);
    return r;
}

}  // namespace hallq
