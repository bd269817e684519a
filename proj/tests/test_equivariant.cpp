#include <doctest.h>

#include <random>

#include "hallq/equivariant.hpp"
#include "hallq/json_io.hpp"

using namespace hallq;

namespace {

// conjugacy classes of a subgroup (given by sorted member ids) of g
std::vector<std::vector<int>> subgroup_classes(const FiniteGroupModel& g,
                                               const std::vector<int>& members) {
    std::vector<std::vector<int>> classes;
    std::map<int, bool> seen;
    for (int x : members) {
        if (seen[x]) continue;
        std::vector<int> cls;
        for (int h : members) {
            int y = g.mul(g.mul(h, x), g.inv(h));
            if (!seen[y]) {
                seen[y] = true;
                cls.push_back(y);
            }
        }
        classes.push_back(cls);
    }
    return classes;
}

}  // namespace

TEST_CASE("symmetric group character tables") {
    SUBCASE("r = 1") {
        auto& t = SymCharacterTable::of(1);
        REQUIRE(t.partitions().size() == 1);
        CHECK(t.value(0, 0) == 1);
    }
    SUBCASE("r = 2: trivial and sign") {
        auto& t = SymCharacterTable::of(2);
        // partitions in reverse-lex order: (2), (1,1)
        REQUIRE(t.partitions().size() == 2);
        CHECK(t.partitions()[0] == Partition{2});
        // chi^{(2)} = trivial: (1, 1); chi^{(1,1)} = sign: (-1 on class (2), 1 on (1^2))
        CHECK(t.value(0, 0) == 1);
        CHECK(t.value(0, 1) == 1);
        CHECK(t.value(1, 0) == -1);
        CHECK(t.value(1, 1) == 1);
    }
    SUBCASE("r = 3: degrees 1, 2, 1 and degree-square sum 6") {
        auto& t = SymCharacterTable::of(3);
        std::multiset<Int> degrees;
        Int sq = 0;
        for (size_t l = 0; l < t.partitions().size(); ++l) {
            degrees.insert(t.degree(static_cast<int>(l)));
            sq += t.degree(static_cast<int>(l)) * t.degree(static_cast<int>(l));
        }
        CHECK(degrees == std::multiset<Int>{1, 1, 2});
        CHECK(sq == 6);
    }
    SUBCASE("orthonormality for r <= 6") {
        for (int r = 1; r <= 6; ++r) {
            auto& t = SymCharacterTable::of(r);
            int n = static_cast<int>(t.partitions().size());
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    CHECK(t.inner(a, b) == (a == b ? Rational(1) : Rational(0)));
        }
    }
    SUBCASE("caps") { CHECK_THROWS_AS(SymCharacterTable::of(9), ValidationError); }
}

TEST_CASE("class sizes partition the group") {
    for (int r = 1; r <= 6; ++r) {
        Int total = 0;
        for (auto& mu : partitions_of(r)) total += class_size(r, mu);
        CHECK(total == factorial(r));
    }
}

TEST_CASE("group models") {
    SUBCASE("S_3 classes by cycle type") {
        auto g = FiniteGroupModel::symmetric(3);
        CHECK(g->size() == 6);
        REQUIRE(g->num_classes() == 3);
        // partitions_of(3) order: (3), (2,1), (1,1,1)
        CHECK(g->class_sz(0) == 2);
        CHECK(g->class_sz(1) == 3);
        CHECK(g->class_sz(2) == 1);
        CHECK(g->class_of(g->identity()) == 2);
    }
    SUBCASE("GL_2(F_2) and GL_2(F_3)") {
        auto g2 = FiniteGroupModel::gl2(2);
        CHECK(g2->size() == 6);
        auto g3 = FiniteGroupModel::gl2(3);
        CHECK(g3->size() == 48);
        Int sum = 0;
        for (int c = 0; c < g3->num_classes(); ++c) sum += g3->class_sz(c);
        CHECK(sum == 48);
    }
}

TEST_CASE("parabolic subgroups match their order formulas") {
    // GL_2 parabolic orders, exhaustive membership
    for (int q : {2, 3}) {
        auto g = FiniteGroupModel::gl2(q);
        auto borel = parabolic_subgroup(g, {1, 1});
        CHECK(borel.order() == Int(q) * (q - 1) * (q - 1));
        auto full = parabolic_subgroup(g, {2});
        CHECK(full.order() == Int(g->size()));
    }
    // Young subgroups of S_r, r <= 5
    for (int r = 2; r <= 5; ++r) {
        auto g = FiniteGroupModel::symmetric(r);
        std::function<void(int, std::vector<int>&)> rec = [&](int rest, std::vector<int>& acc) {
            if (rest == 0) {
                auto p = parabolic_subgroup(g, acc);
                Int expect = 1;
                for (int e : acc) expect *= factorial(e);
                CHECK(p.order() == expect);
                return;
            }
            for (int part = 1; part <= rest; ++part) {
                acc.push_back(part);
                rec(rest - part, acc);
                acc.pop_back();
            }
        };
        std::vector<int> acc;
        rec(r, acc);
    }
}

TEST_CASE("induction examples") {
    SUBCASE("trivial character of S_2 in S_3: permutation character (3,1,0)") {
        auto g = FiniteGroupModel::symmetric(3);
        auto p = parabolic_subgroup(g, {2, 1});
        ClassFunction ind = induce(g, p.members, [](int) { return MotivicScalar(1); });
        // classes ordered (3), (2,1), (1^3)
        CHECK(ind.at_class(0) == MotivicScalar(0));
        CHECK(ind.at_class(1) == MotivicScalar(1));
        CHECK(ind.at_class(2) == MotivicScalar(3));
        CHECK(ind.dimension_at(Rational(7)) == Rational(3));  // constant in t
    }
    SUBCASE("H = G is the identity") {
        auto g = FiniteGroupModel::symmetric(3);
        std::vector<int> all;
        for (int i = 0; i < 6; ++i) all.push_back(i);
        ClassFunction f = ClassFunction::sym_irreducible(g, {2, 1});
        ClassFunction ind = induce(g, all, restrict_to(f));
        CHECK(ind == f);
    }
    SUBCASE("induction from the trivial subgroup: regular character") {
        auto g = FiniteGroupModel::symmetric(2);
        ClassFunction ind = induce(g, {g->identity()}, [](int) { return MotivicScalar(1); });
        // classes (2), (1^2): regular character (0, 2)
        CHECK(ind.at_class(0) == MotivicScalar(0));
        CHECK(ind.at_class(1) == MotivicScalar(2));
    }
}

TEST_CASE("external products") {
    auto s2 = FiniteGroupModel::symmetric(2);
    ClassFunction sign = ClassFunction::sym_irreducible(s2, {1, 1});
    ClassFunction triv = ClassFunction::trivial(s2);
    SUBCASE("trivial x trivial") {
        ClassFunction p = external_product(triv, triv);
        for (int c = 0; c < p.group()->num_classes(); ++c)
            CHECK(p.at_class(c) == MotivicScalar(1));
    }
    SUBCASE("sign x sign on S_2 x S_2") {
        ClassFunction p = external_product(sign, sign);
        REQUIRE(p.group()->num_classes() == 4);
        std::multiset<std::string> values;
        for (int c = 0; c < 4; ++c) values.insert(p.at_class(c).to_string());
        CHECK(values == std::multiset<std::string>{"1", "1", "-1", "-1"});
        CHECK(p.at_element(p.group()->identity()) == MotivicScalar(1));
    }
    SUBCASE("degrees multiply") {
        auto s3 = FiniteGroupModel::symmetric(3);
        ClassFunction f = ClassFunction::sym_irreducible(s3, {2, 1});
        ClassFunction p = external_product(f, sign);
        CHECK(p.dimension_at(Rational(1)) ==
              f.dimension_at(Rational(1)) * sign.dimension_at(Rational(1)));
    }
}

TEST_CASE("Frobenius reciprocity on Young subgroups, r <= 5") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dv(-4, 4);
    for (int r = 2; r <= 5; ++r) {
        auto g = FiniteGroupModel::symmetric(r);
        auto& table = SymCharacterTable::of(r);
        std::vector<std::vector<int>> etas = {{r - 1, 1}};
        if (r >= 3) etas.push_back({r - 2, 1, 1});
        if (r >= 4) etas.push_back({2, r - 2});
        for (auto& eta : etas) {
            auto p = parabolic_subgroup(g, eta);
            // random class function on H, constant on H-classes
            auto hcls = subgroup_classes(*g, p.members);
            std::map<int, MotivicScalar> fval;
            for (auto& cls : hcls) {
                MotivicScalar v(dv(rng));
                for (int x : cls) fval[x] = v;
            }
            ClassFunction ind = induce(g, p.members, [&](int y) { return fval.at(y); });
            for (size_t l = 0; l < table.partitions().size(); ++l) {
                ClassFunction chi = ClassFunction::sym_irreducible(g, table.partitions()[l]);
                // <Ind f, chi>_G
                MotivicScalar lhs = ind.inner(chi);
                // <f, Res chi>_H
                MotivicScalar rhs(0);
                for (int x : p.members) rhs += fval.at(x) * chi.at_element(x);
                rhs = rhs / MotivicScalar(Rational(Int(p.members.size())));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("induction transitivity via cycle types") {
    // Ind_{S_eta}^{S_r} . Ind_{S_eta'}^{S_eta} = Ind_{S_eta'}^{S_r}
    // on products of sign/trivial test characters
    auto sign_val = [](const Partition& mu) {
        int s = 0;
        for (int part : mu) s += part - 1;
        return MotivicScalar(s % 2 == 0 ? 1 : -1);
    };
    auto triv_val = [](const Partition&) { return MotivicScalar(1); };

    // r = 4, eta = (2,2), eta' = (1,1,2): blocks of eta' refine eta
    int r = 4;
    std::vector<int> eta = {2, 2};
    // direct: Ind from S_{(1,1,2)} with characters (triv, triv, sign)
    auto direct = induce_young_cycle_types(
        r, {1, 1, 2}, {triv_val, triv_val, sign_val});
    // composed: first induce (triv, triv) from S_1 x S_1 to S_2 (a class
    // function on S_2 by cycle type), then Ind_{S_2 x S_2}^{S_4}(that, sign)
    auto inner_vals = induce_young_cycle_types(2, {1, 1}, {triv_val, triv_val});
    auto parts2 = partitions_of(2);
    auto inner_fun = [&](const Partition& mu) {
        for (size_t i = 0; i < parts2.size(); ++i)
            if (parts2[i] == mu) return inner_vals[i];
        throw ValidationError("unknown class");
    };
    auto composed = induce_young_cycle_types(r, {2, 2}, {inner_fun, sign_val});
    CHECK(direct == composed);
}

TEST_CASE("generic and combinatorial Young induction agree") {
    for (int r = 2; r <= 5; ++r) {
        auto g = FiniteGroupModel::symmetric(r);
        std::vector<int> eta = {r - 1, 1};
        auto p = parabolic_subgroup(g, eta);
        ClassFunction generic = induce(g, p.members, [](int) { return MotivicScalar(1); });
        auto comb = induce_young_cycle_types(
            r, eta,
            {[](const Partition&) { return MotivicScalar(1); },
             [](const Partition&) { return MotivicScalar(1); }});
        for (int c = 0; c < g->num_classes(); ++c) CHECK(generic.at_class(c) == comb[c]);
    }
}

TEST_CASE("equivariant period domains") {
    Budget b;
    SUBCASE("single-step type: the trivial character") {
        FlagType ft{2, {2}, {1}};
        ClassFunction f = equivariant_period_domain(ft, PeriodField::Fq, 2);
        CHECK(f == ClassFunction::trivial(f.group()));
    }
    SUBCASE("F_q, rank 2: identity value at t -> q is the flag count") {
        for (int q : {2, 3}) {
            for (std::vector<long> theta : {std::vector<long>{1, 0}, {1, 1}, {2, 0}}) {
                FlagType ft{2, {1, 1}, theta};
                ClassFunction f = equivariant_period_domain(ft, PeriodField::Fq, q);
                auto bf = period_domain_count(ft, PeriodField::Fq, PeriodMode::bruteforce, q, b);
                CHECK(f.dimension_at(Rational(q)) == bf.count);
            }
        }
    }
    SUBCASE("F_q rank 2, theta (1,0): the explicit virtual character") {
        // chi = (t+1) * 1 - PermChar(G/B): values (t+1) - fix(g | P^1(F_q))
        int q = 2;
        FlagType ft{2, {1, 1}, {1, 0}};
        ClassFunction f = equivariant_period_domain(ft, PeriodField::Fq, q);
        auto g = f.group();
        auto borel = parabolic_subgroup(g, {1, 1});
        ClassFunction perm = induce(g, borel.members, [](int) { return MotivicScalar(1); });
        ClassFunction expect =
            ClassFunction::constant(g, MotivicScalar(IntPoly::variable() + IntPoly(1))) - perm;
        CHECK(f == expect);
    }
    SUBCASE("F_1: identity value at t -> 1 is the signed subset count") {
        for (int r = 2; r <= 4; ++r) {
            std::function<void(int, std::vector<int>&)> rec = [&](int rest,
                                                                  std::vector<int>& acc) {
                if (rest == 0) {
                    for (auto theta : std::vector<std::vector<long>>{{3, 2, 1, 0}, {1, 1, 0, 0},
                                                                     {1, 1, 1, 1}}) {
                        theta.resize(acc.size());
                        bool mono = true;
                        for (size_t i = 0; i + 1 < theta.size(); ++i)
                            mono = mono && theta[i] >= theta[i + 1];
                        if (!mono) continue;
                        FlagType ft{r, acc, theta};
                        ClassFunction f = equivariant_period_domain(ft, PeriodField::F1, 0);
                        auto bf =
                            period_domain_count(ft, PeriodField::F1, PeriodMode::bruteforce, 0, b);
                        CHECK(f.dimension_at(Rational(1)) == bf.count);
                    }
                    return;
                }
                for (int part = 1; part <= rest; ++part) {
                    acc.push_back(part);
                    rec(rest - part, acc);
                    acc.pop_back();
                }
            };
            std::vector<int> acc;
            rec(r, acc);
        }
    }
    SUBCASE("values are class functions with t-polynomial entries") {
        FlagType ft{3, {1, 2}, {1, 0}};
        ClassFunction f = equivariant_period_domain(ft, PeriodField::F1, 0);
        Json j = to_json(f);
        CHECK(j["group"] == "S_3");
        CHECK(j["classes"].size() == 3);
    }
    SUBCASE("caps") {
        FlagType big{3, {1, 1, 1}, {1, 1, 0}};
        CHECK_THROWS_AS(equivariant_period_domain(big, PeriodField::Fq, 2), ValidationError);
        FlagType huge{7, {7}, {1}};
        CHECK_THROWS_AS(equivariant_period_domain(huge, PeriodField::F1, 0), ValidationError);
    }
}

TEST_CASE("dimension_at examples") {
    // gaussian character ingredient for r=2, delta=(1,1) at t=2: 3 lines
    auto g = FiniteGroupModel::gl2(2);
    ClassFunction gauss =
        ClassFunction::constant(g, MotivicScalar(gaussian_multinomial(2, {1, 1})));
    CHECK(gauss.dimension_at(Rational(2)) == Rational(3));
    CHECK(ClassFunction::zero(g).dimension_at(Rational(5)) == Rational(0));
    // induced trivial from S_2 in S_3 at the identity: index 3
    auto s3 = FiniteGroupModel::symmetric(3);
    auto p = parabolic_subgroup(s3, {2, 1});
    CHECK(induce(s3, p.members, [](int) { return MotivicScalar(1); })
              .dimension_at(Rational(1)) == Rational(3));
}

TEST_CASE("dimension_at pole detection") {
    auto g = FiniteGroupModel::symmetric(2);
    ClassFunction f = ClassFunction::constant(
        g, MotivicScalar(IntPoly(1), IntPoly::tn_minus_1(1)));  // 1/(t-1)
    CHECK(f.dimension_at(Rational(3)) == Rational(1, 2));
    CHECK_THROWS_AS(f.dimension_at(Rational(1)), ValidationError);
}

TEST_CASE("decomposition into irreducibles of S_r") {
    auto g = FiniteGroupModel::symmetric(3);
    // permutation character on 3 points = trivial + standard
    auto p = parabolic_subgroup(g, {2, 1});
    ClassFunction perm = induce(g, p.members, [](int) { return MotivicScalar(1); });
    auto mult = perm.decompose_symmetric();
    auto parts = SymCharacterTable::of(3).partitions();
    REQUIRE(mult.size() == parts.size());
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == Partition{3} || parts[i] == Partition{2, 1})
            CHECK(mult[i] == MotivicScalar(1));
        else
            CHECK(mult[i] == MotivicScalar(0));
    }
    // reassembling from the multiplicities gives the character back
    ClassFunction sum = ClassFunction::zero(g);
    for (size_t i = 0; i < parts.size(); ++i)
        sum = sum + ClassFunction::sym_irreducible(g, parts[i]).times(mult[i]);
    CHECK(sum == perm);
}

TEST_CASE("stability JSON round trip") {
    StabilityData s({1, 0}, {1, 2});
    Json j = to_json(s);
    StabilityData back = stability_from_json(j);
    CHECK(back.theta == s.theta);
    CHECK(back.rank_weights == s.rank_weights);
    StabilityData defaulted = stability_from_json(Json::parse(R"({"theta":[1,-1]})"));
    CHECK(defaulted.rank_weights == std::vector<long>{1, 1});
    CHECK_THROWS_AS(stability_from_json(Json::parse(R"({"theta":[1],"rank":[0]})")),
                    ValidationError);
}

TEST_CASE("specialization consistency on the criterion grid") {
    Budget b;
    // F_q: r = 2 over F_2 and F_3, at least two weight vectors
    for (int q : {2, 3}) {
        for (std::vector<long> theta : {std::vector<long>{1, 0}, {1, 1}}) {
            FlagType ft{2, {1, 1}, theta};
            ClassFunction f = equivariant_period_domain(ft, PeriodField::Fq, q);
            auto bf = period_domain_count(ft, PeriodField::Fq, PeriodMode::bruteforce, q, b);
            CHECK(f.dimension_at(Rational(q)) == bf.count);
        }
    }
    // F_1: r <= 4 with two weight vectors
    for (int r = 2; r <= 4; ++r) {
        std::vector<int> delta(r, 1);
        for (std::vector<long> theta_full : {std::vector<long>{3, 2, 1, 0}, {1, 0, 0, 0}}) {
            std::vector<long> theta(theta_full.begin(), theta_full.begin() + r);
            FlagType ft{r, delta, theta};
            ClassFunction f = equivariant_period_domain(ft, PeriodField::F1, 0);
            auto bf = period_domain_count(ft, PeriodField::F1, PeriodMode::bruteforce, 0, b);
            CHECK(f.dimension_at(Rational(1)) == bf.count);
        }
    }
}
