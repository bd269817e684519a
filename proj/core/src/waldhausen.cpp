#include "hallq/waldhausen.hpp"

namespace hallq {

QuiverCountingContext::Key QuiverCountingContext::ensure(const QuiverRep& r) {
    Key k = ctx_.class_key(r);
    if (!info_.count(k)) {
        QuiverRep canon = ctx_.canonical_form(r);
        Int a = ctx_.aut_order(canon);
        info_.emplace(k, Info{std::move(canon), r.dim, a});
    }
    return k;
}

std::vector<QuiverCountingContext::Key> QuiverCountingContext::classes_up_to(int bound) {
    std::vector<Key> out;
    DimVec cap(ctx_.quiver().num_vertices(), bound);
    std::vector<DimVec> dims = effective_vectors_below(cap);
    dims.insert(dims.begin(), DimVec(ctx_.quiver().num_vertices(), 0));
    for (auto& d : dims) {
        if (total_dim(d) > bound) continue;
        for (auto& cls : ctx_.iso_classes(d)) out.push_back(ensure(cls.rep));
    }
    return out;
}

std::string QuiverCountingContext::label(const Key& k) const {
    auto& inf = info_.at(k);
    std::string s = dim_to_string(inf.dim) + "#" + std::to_string(ctx_.class_index(inf.rep));
    return s;
}

const std::map<std::pair<QuiverCountingContext::Key, QuiverCountingContext::Key>, Int>&
QuiverCountingContext::sub_quot_counts(const Key& e) {
    auto it = gcache_.find(e);
    if (it != gcache_.end()) return it->second;
    std::map<std::pair<Key, Key>, Int> g;
    for (auto& sq : ctx_.subobjects(info_.at(e).rep)) {
        Key u = ensure(sq.sub), q = ensure(sq.quot);
        g[{u, q}] += 1;
    }
    return gcache_.emplace(e, std::move(g)).first->second;
}

const std::map<std::vector<QuiverCountingContext::Key>, Int>& QuiverCountingContext::chain_counts(
    const Key& e, int steps) {
    auto key = std::make_pair(e, steps);
    auto it = chain_cache_.find(key);
    if (it != chain_cache_.end()) return it->second;
    std::map<std::vector<Key>, Int> out;
    if (steps <= 1) {
        out[{e}] = 1;
    } else {
        // choose the top subobject U_{steps-1} (with quotient class last),
        // then recurse inside it
        for (auto& sq : ctx_.subobjects(info_.at(e).rep)) {
            Key u = ensure(sq.sub), q = ensure(sq.quot);
            for (auto& [grade, cnt] : chain_counts(u, steps - 1)) {
                std::vector<Key> g = grade;
                g.push_back(q);
                out[g] += cnt;
            }
        }
    }
    return chain_cache_.emplace(key, std::move(out)).first->second;
}

std::vector<PointedCountingContext::Key> PointedCountingContext::classes_up_to(int bound) {
    std::vector<Key> out;
    for (int n = 0; n <= bound; ++n) out.push_back(n);
    return out;
}

const std::map<std::pair<int, int>, Int>& PointedCountingContext::sub_quot_counts(Key e) {
    auto it = gcache_.find(e);
    if (it != gcache_.end()) return it->second;
    std::map<std::pair<Key, Key>, Int> g;
    for (unsigned mask : ctx_.subsets(e)) {
        int k = __builtin_popcount(mask);
        g[{k, e - k}] += 1;
    }
    return gcache_.emplace(e, std::move(g)).first->second;
}

const std::map<std::vector<int>, Int>& PointedCountingContext::chain_counts(Key e, int steps) {
    auto key = std::make_pair(e, steps);
    auto it = chain_cache_.find(key);
    if (it != chain_cache_.end()) return it->second;
    std::map<std::vector<Key>, Int> out;
    if (steps <= 1) {
        out[{e}] = 1;
    } else {
        for (unsigned mask : ctx_.subsets(e)) {
            int k = __builtin_popcount(mask);
            for (auto& [grade, cnt] : chain_counts(k, steps - 1)) {
                std::vector<Key> g = grade;
                g.push_back(e - k);
                out[g] += cnt;
            }
        }
    }
    return chain_cache_.emplace(key, std::move(out)).first->second;
}

}  // namespace hallq
