#include <doctest.h>

#include <algorithm>
#include <set>

#include "hallq/hecke.hpp"
#include "hallq/json_io.hpp"
#include "hallq/waldhausen.hpp"

using namespace hallq;

namespace {

QuiverRep rep_a2(int q, int d1, int d2, const std::vector<int>& mat_entries) {
    QuiverRep r;
    r.q = q;
    r.dim = {d1, d2};
    FqMat m(d2, d1);
    for (size_t i = 0; i < mat_entries.size(); ++i)
        m.a[i] = static_cast<std::uint8_t>(mat_entries[i]);
    r.mats = {m};
    return r;
}

}  // namespace

TEST_CASE("enumerate_reps on A_2 dimension (1,1)") {
    QuiverRepContext ctx(Quiver::a2(), 2);
    auto& classes = ctx.iso_classes({1, 1});
    REQUIRE(classes.size() == 2);  // zero map and isomorphism
    CHECK(classes[0].aut_order == 1);
    CHECK(classes[1].aut_order == 1);

    QuiverRepContext ctx3(Quiver::a2(), 3);
    auto& classes3 = ctx3.iso_classes({1, 1});
    REQUIRE(classes3.size() == 2);
    Rational groupoid_count = 0;
    for (auto& c : classes3) groupoid_count += Rational(1, c.aut_order);
    CHECK(groupoid_count == Rational(3, 4));  // q/(q-1)^2 at q = 3
    std::multiset<Int> orders{classes3[0].aut_order, classes3[1].aut_order};
    CHECK(orders == std::multiset<Int>{2, 4});
}

TEST_CASE("enumerate_reps on a single vertex") {
    QuiverRepContext ctx(Quiver::a1(), 3);
    auto& classes = ctx.iso_classes({1});
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].aut_order == 2);  // GL_1(F_3)
}

TEST_CASE("orbit-stabilizer accounting across small dimension vectors") {
    for (int q : {2, 3}) {
        for (auto Q : {Quiver::a1(), Quiver::a2(), Quiver::kronecker()}) {
            QuiverRepContext ctx(Q, q);
            DimVec cap(Q.num_vertices(), 2);
            for (auto& d : effective_vectors_below(cap)) {
                if (total_dim(d) > 3) continue;
                Int orbit_sum = 0;
                for (auto& cls : ctx.iso_classes(d)) orbit_sum += cls.orbit_size;
                CHECK(orbit_sum == ctx.variety_point_count(d));
            }
        }
    }
}

TEST_CASE("subobjects of A_2 representations") {
    QuiverRepContext ctx(Quiver::a2(), 2);
    // zero map of dim (1,1): 0, (1,0), (0,1), E
    auto subs_zero = ctx.subobjects(rep_a2(2, 1, 1, {0}));
    CHECK(subs_zero.size() == 4);
    // identity map: (1,0) is not arrow-closed
    auto subs_id = ctx.subobjects(rep_a2(2, 1, 1, {1}));
    CHECK(subs_id.size() == 3);
    for (auto& sq : subs_id) CHECK(sq.sub.dim != DimVec{1, 0});
    // zero object
    CHECK(ctx.subobjects(ctx.zero_object()).size() == 1);
}

TEST_CASE("subobject duality: sub dims match quotient codims") {
    QuiverRepContext ctx(Quiver::a2(), 2);
    for (auto& cls : ctx.iso_classes({1, 2})) {
        std::multiset<DimVec> subs, quots;
        for (auto& sq : ctx.subobjects(cls.rep)) {
            subs.insert(sq.sub.dim);
            quots.insert(dim_diff(cls.rep.dim, sq.quot.dim));
        }
        CHECK(subs == quots);
    }
}

TEST_CASE("hom and ext dimensions") {
    QuiverRepContext ctx(Quiver::a2(), 2);
    QuiverRep s1 = ctx.simple(0), s2 = ctx.simple(1);
    CHECK(ctx.hom_dim(s1, s1) == 1);
    CHECK(ctx.ext1_dim(s1, s1) == 0);
    CHECK(ctx.hom_dim(s1, s2) == 0);
    CHECK(ctx.ext1_dim(s1, s2) == 1);  // arrow 1 -> 2
    CHECK(ctx.hom_dim(s2, s1) == 0);
    CHECK(ctx.ext1_dim(s2, s1) == 0);
    CHECK(ctx.hom_dim(ctx.zero_object(), s1) == 0);
    CHECK(ctx.ext1_dim(ctx.zero_object(), s1) == 0);
}

TEST_CASE("hereditary Euler identity hom - ext = psi on enumerated pairs") {
    for (int q : {2, 3}) {
        QuiverRepContext ctx(Quiver::a2(), q);
        std::vector<QuiverRep> reps;
        for (auto& d : std::vector<DimVec>{{1, 0}, {0, 1}, {1, 1}, {2, 1}})
            for (auto& cls : ctx.iso_classes(d)) reps.push_back(cls.rep);
        for (auto& a : reps)
            for (auto& b : reps)
                CHECK(ctx.hom_dim(a, b) - ctx.ext1_dim(a, b) == ctx.euler_form(a.dim, b.dim));
    }
}

TEST_CASE("middle-term count oracle (Riedtmann direction)") {
    // sum over middle terms of #{subs iso S_2 with quotient iso S_1}/#Aut(E)
    // equals q^{ext(S_1,S_2)-hom(S_1,S_2)} / (#Aut S_1 #Aut S_2) = 2 at q=2
    QuiverRepContext ctx(Quiver::a2(), 2);
    QuiverRep s1 = ctx.simple(0), s2 = ctx.simple(1);
    Rational lhs = 0;
    for (auto& cls : ctx.iso_classes({1, 1})) {
        Int g = 0;
        for (auto& sq : ctx.subobjects(cls.rep))
            if (sq.sub.dim == s2.dim && sq.quot.dim == s1.dim) ++g;
        lhs += Rational(g, cls.aut_order);
    }
    CHECK(lhs == Rational(2));
}

TEST_CASE("waldhausen cells") {
    QuiverRepContext ctx(Quiver::a1(), 2);
    QuiverCountingContext cc(ctx);

    auto s0 = waldhausen_cells(cc, 0, 3);
    CHECK(s0.total() == Rational(1));  // S_0 contractible

    auto s1 = waldhausen_cells(cc, 1, 1);
    REQUIRE(s1.strata.size() == 2);  // classes {0, F_2}
    CHECK(s1.strata[0].ambient_aut == 1);
    CHECK(s1.strata[1].ambient_aut == 1);

    // n = 2, grading (1,1): the 3 lines in F_2^2 over ambient GL_2(F_2)
    auto s2 = waldhausen_cells(cc, 2, 2);
    auto one = cc.classes_up_to(1)[1];
    bool found = false;
    for (auto& st : s2.strata) {
        if (st.grade == std::vector<std::string>{cc.label(one), cc.label(one)}) {
            found = true;
            CHECK(st.chain_count == 3);
            CHECK(st.ambient_aut == 6);
            CHECK(st.hcard == Rational(1, 2));
        }
    }
    CHECK(found);
}

TEST_CASE("2-Segal counting checks pass") {
    SUBCASE("vect over F_2 and F_3, bound 3") {
        for (int q : {2, 3}) {
            QuiverRepContext ctx(Quiver::a1(), q);
            QuiverCountingContext cc(ctx);
            auto rep = verify_2segal_counting(cc, 3);
            CHECK(rep.all_pass);
            CHECK(!rep.rows.empty());
        }
    }
    SUBCASE("rep(A_2) over F_2 and F_3, bound 3") {
        for (int q : {2, 3}) {
            QuiverRepContext ctx(Quiver::a2(), q);
            QuiverCountingContext cc(ctx);
            CHECK(verify_2segal_counting(cc, 3).all_pass);
        }
    }
    SUBCASE("pointed sets of size <= 3") {
        PointedSetContext ps;
        PointedCountingContext cc(ps);
        auto rep = verify_2segal_counting(cc, 3);
        CHECK(rep.all_pass);
        CHECK(!rep.rows.empty());
    }
    SUBCASE("degenerate bound 0 trivially passes") {
        QuiverRepContext ctx(Quiver::a1(), 2);
        QuiverCountingContext cc(ctx);
        CHECK(verify_2segal_counting(cc, 0).all_pass);
    }
}

TEST_CASE("hecke algebra of (S_3, S_2)") {
    FiniteGroupTable s3 = FiniteGroupTable::symmetric(3);
    // lexicographic one-line perms of {0,1,2}: 012,021,102,120,201,210;
    // S_2 = {identity, swap(0,1)} = indices {0, 2}
    HeckeAlgebra h = hecke_structure_constants(s3, {0, 2});
    CHECK(h.rank == 2);
    int e = h.unit_index();
    int other = 1 - e;
    // direct double-coset convolution oracle on the 3 cosets:
    // 1_off * 1_off = 2 * 1_diag + 1 * 1_off
    CHECK(h.constants[other][other][e] == Rational(2));
    CHECK(h.constants[other][other][other] == Rational(1));
    CHECK(h.constants[e][other][other] == Rational(1));
    CHECK(h.constants[other][e][other] == Rational(1));
    CHECK(h.is_associative());
    for (int a = 0; a < h.rank; ++a)
        for (int b = 0; b < h.rank; ++b)
            for (int d = 0; d < h.rank; ++d) CHECK(h.constants[a][b][d] >= 0);
}

TEST_CASE("hecke algebra degenerate subgroups") {
    FiniteGroupTable s3 = FiniteGroupTable::symmetric(3);
    SUBCASE("K = G: rank 1, unit only") {
        HeckeAlgebra h = hecke_structure_constants(s3, {0, 1, 2, 3, 4, 5});
        CHECK(h.rank == 1);
        CHECK(h.constants[0][0][0] == Rational(1));
        CHECK(h.unit_index() == 0);
    }
    SUBCASE("K = {e}: the group algebra of G") {
        HeckeAlgebra h = hecke_structure_constants(s3, {0});
        CHECK(h.rank == 6);
        CHECK(h.is_associative());
        // each product of basis elements is a single basis element
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                Rational total = 0;
                for (int d = 0; d < 6; ++d) {
                    CHECK((h.constants[a][b][d] == 0 || h.constants[a][b][d] == 1));
                    total += h.constants[a][b][d];
                }
                CHECK(total == 1);
            }
    }
    SUBCASE("K not closed under multiplication is rejected") {
        CHECK_THROWS_AS(hecke_structure_constants(s3, {0, 3}), ValidationError);
    }
}

TEST_CASE("hecke associativity for (S_4, S_3) and a cyclic pair") {
    FiniteGroupTable s4 = FiniteGroupTable::symmetric(4);
    std::vector<int> k;
    {
        std::vector<int> p = {0, 1, 2, 3};
        int idx = 0;
        do {
            if (p[3] == 3) k.push_back(idx);
            ++idx;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    HeckeAlgebra h = hecke_structure_constants(s4, k);
    CHECK(h.rank == 2);  // S_4 is 2-transitive on 4 points
    CHECK(h.is_associative());

    HeckeAlgebra hc = hecke_structure_constants(FiniteGroupTable::cyclic(6), {0, 3});
    CHECK(hc.rank == 3);
    CHECK(hc.is_associative());
}

TEST_CASE("group, quiver and rep JSON") {
    FiniteGroupTable s3 = FiniteGroupTable::symmetric(3);
    FiniteGroupTable back = group_from_json(to_json(s3));
    CHECK(back.mul == s3.mul);

    QuiverRep r = rep_a2(2, 1, 1, {1});
    CHECK(rep_from_json(to_json(r)).byte_key() == r.byte_key());

    Quiver q =
        quiver_from_json(Json::parse(R"({"vertices":["1","2"],"arrows":[{"src":"1","tgt":"2"}]})"));
    CHECK(q == Quiver::a2());
    CHECK_THROWS_AS(
        quiver_from_json(Json::parse(R"({"vertices":["1"],"arrows":[{"src":"1","tgt":"1"}]})")),
        ValidationError);
    CHECK_THROWS_AS(quiver_from_json(Json::parse(
                        R"({"vertices":["1","2"],
                            "arrows":[{"src":"1","tgt":"2"},{"src":"2","tgt":"1"}]})")),
                    ValidationError);
}

TEST_CASE("budget errors are raised, never silent truncation") {
    QuiverRepContext ctx(Quiver::kronecker(2), 3, Budget(10));
    CHECK_THROWS_AS(ctx.iso_classes({1, 1}), BudgetError);
}

TEST_CASE("non-prime field sizes are rejected") {
    CHECK_THROWS_AS(QuiverRepContext(Quiver::a1(), 4), ValidationError);
    CHECK_THROWS_AS(QuiverRepContext(Quiver::a1(), 1), ValidationError);
}
