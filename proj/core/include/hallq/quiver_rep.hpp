#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hallq/fq.hpp"
#include "hallq/quiver.hpp"

namespace hallq {

/// Representation of an acyclic quiver over F_q: one matrix per arrow, of
/// shape dim(target) x dim(source), entries reduced mod q.
struct QuiverRep {
    int q = 2;
    DimVec dim;
    std::vector<FqMat> mats;

    void validate(const Quiver& Q) const;
    bool is_zero_object() const { return dim_is_zero(dim); }
    /// Concatenated bytes (dim, then matrix entries); total order on reps
    /// of a fixed shape.
    std::string byte_key() const;
};

/// Context for all groupoid-level computations attached to rep_{F_q}(Q).
/// Iso-class tables are computed by exhaustive orbit enumeration and cached
/// per dimension vector. Immutable after construction except for the caches,
/// which are idempotent.
class QuiverRepContext {
  public:
    QuiverRepContext(Quiver Q, int q, Budget budget = Budget());

    const Quiver& quiver() const { return Q_; }
    int q() const { return q_; }
    Budget& budget() const { return budget_; }

    struct IsoClass {
        QuiverRep rep;   // canonical representative (lex-minimal in its orbit)
        Int aut_order;   // |Aut(rep)|
        Int orbit_size;  // |GL_alpha| / aut_order
    };

    /// Complete iso-class table in dimension vector alpha, canonically
    /// ordered by representative bytes. Satisfies the orbit-sum identity
    /// sum_r |orbit(r)| = q^{dim V_{Q,alpha}}.
    const std::vector<IsoClass>& iso_classes(const DimVec& alpha) const;

    /// Total point count q^{sum_e d_s(e) d_t(e)} of the representation variety.
    Int variety_point_count(const DimVec& alpha) const;
    Int gl_alpha_order(const DimVec& alpha) const;

    /// Canonical representative of the iso class of r (lex-minimal orbit
    /// element) together with its automorphism-group order.
    QuiverRep canonical_form(const QuiverRep& r) const;
    Int aut_order(const QuiverRep& r) const;
    /// Index into iso_classes(r.dim).
    int class_index(const QuiverRep& r) const;
    /// Canonical key: dim vector + canonical representative bytes.
    std::string class_key(const QuiverRep& r) const;

    struct SubQuot {
        QuiverRep sub;    // intrinsic rep of the subobject
        QuiverRep quot;   // intrinsic rep of the quotient
        std::vector<FqMat> sub_bases;  // column bases of the subspaces in E
    };

    /// All subrepresentations of E (vertex-wise subspaces closed under the
    /// arrow maps), each with its induced quotient. Includes 0 and E.
    std::vector<SubQuot> subobjects(const QuiverRep& E) const;

    /// dim Hom(A, B): solution space of the intertwiner equations.
    int hom_dim(const QuiverRep& A, const QuiverRep& B) const;
    /// dim Ext^1(A, B) = hom_dim(A,B) - psi(dim A, dim B); valid since path
    /// algebras of acyclic quivers are hereditary.
    int ext1_dim(const QuiverRep& A, const QuiverRep& B) const;

    /// Euler form psi(x, y) = sum_i x_i y_i - sum_e x_{s(e)} y_{t(e)}.
    long euler_form(const DimVec& x, const DimVec& y) const;
    /// chi_op(x, y) = psi(y, x).
    long chi_op(const DimVec& x, const DimVec& y) const;
    /// chi_op as an explicit matrix C, chi_op(x,y) = x^T C y.
    std::vector<std::vector<long>> chi_op_matrix() const;

    QuiverRep zero_object() const;
    QuiverRep simple(int vertex) const;

    /// Induced subrepresentation on given vertex-wise column bases; throws
    /// if the bases are not arrow-closed.
    QuiverRep induced_sub(const QuiverRep& E, const std::vector<FqMat>& bases) const;

    /// Reshapes entry-free matrices of a parsed representation to the shapes
    /// this quiver requires (JSON cannot distinguish 0 x k from k x 0), then
    /// validates.
    QuiverRep conform(QuiverRep r) const;

  private:
    void check_context(const QuiverRep& r) const;

    Quiver Q_;
    int q_;
    mutable Budget budget_;
    mutable std::map<DimVec, std::vector<IsoClass>> table_cache_;
    mutable std::map<std::string, std::pair<QuiverRep, Int>> canon_cache_;
};

}  // namespace hallq
