#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hallq/fq.hpp"
#include "hallq/hecke.hpp"
#include "hallq/sym_char.hpp"

namespace hallq {

/// Finite group with conjugacy class data, either S_r (elements stored as
/// permutations, classes = cycle types) or an explicit multiplication-table
/// group (classes by brute-force conjugation; used for GL_r(F_q), r <= 2).
class FiniteGroupModel {
  public:
    static std::shared_ptr<const FiniteGroupModel> symmetric(int r);
    static std::shared_ptr<const FiniteGroupModel> gl2(int q);
    static std::shared_ptr<const FiniteGroupModel> gl1(int q);
    static std::shared_ptr<const FiniteGroupModel> from_table(FiniteGroupTable table,
                                                              std::string name);
    static std::shared_ptr<const FiniteGroupModel> product(
        const std::shared_ptr<const FiniteGroupModel>& a,
        const std::shared_ptr<const FiniteGroupModel>& b);

    const std::string& name() const { return name_; }
    int size() const { return table_.size(); }
    int mul(int a, int b) const { return table_.mul[a][b]; }
    int inv(int a) const { return table_.inv[a]; }
    int identity() const { return table_.identity; }

    int num_classes() const { return static_cast<int>(class_reps_.size()); }
    int class_of(int elem) const { return class_of_[elem]; }
    int class_rep(int c) const { return class_reps_[c]; }
    Int class_sz(int c) const { return class_sizes_[c]; }
    const std::string& class_label(int c) const { return class_labels_[c]; }
    int identity_class() const { return class_of_[table_.identity]; }

    /// For the symmetric backend only: the stored permutations.
    const std::vector<std::vector<int>>& perms() const { return perms_; }
    bool is_symmetric() const { return !perms_.empty(); }
    int sym_rank() const { return sym_rank_; }

    /// For the GL backends: the stored matrices.
    const std::vector<FqMat>& matrices() const { return mats_; }
    int field() const { return q_; }

    const FiniteGroupTable& table() const { return table_; }

  private:
    FiniteGroupModel() = default;
    void compute_classes_bruteforce();

    std::string name_;
    FiniteGroupTable table_;
    std::vector<int> class_of_;
    std::vector<int> class_reps_;
    std::vector<Int> class_sizes_;
    std::vector<std::string> class_labels_;
    std::vector<std::vector<int>> perms_;
    int sym_rank_ = 0;
    std::vector<FqMat> mats_;
    int q_ = 0;
};

/// Standard parabolic: for GL_r the block upper-triangular subgroup of
/// composition eta (deep-first blocks first), for S_r the Young subgroup
/// S_eta of permutations preserving the consecutive blocks.
struct ParabolicSubgroup {
    std::shared_ptr<const FiniteGroupModel> group;
    std::vector<int> composition;
    std::vector<int> members;  // element ids, sorted

    Int order() const { return Int(members.size()); }
    /// q^{sum_{i<j} e_i e_j} prod |GL_{e_i}| resp. prod e_i!.
    Int order_formula() const;
    void validate() const;  // closure + order formula
};

ParabolicSubgroup parabolic_subgroup(const std::shared_ptr<const FiniteGroupModel>& g,
                                     const std::vector<int>& eta);

}  // namespace hallq
