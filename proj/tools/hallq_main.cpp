// hallq: exact Hall-algebra and Harder-Narasimhan computations over F_q and
// F_1, with brute-force verification suites.
//
// Exit codes: 0 success, 2 validation error, 3 enumeration budget exceeded,
// 4 internal consistency failure (a verified identity broke; must not occur
// on the shipped suites).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hallq/equivariant.hpp"
#include "hallq/json_io.hpp"
#include "hallq/waldhausen.hpp"

using namespace hallq;

namespace {

struct Options {
    bool json = false;
    std::int64_t budget = Budget::kDefaultLimit;
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

Quiver load_quiver(const std::string& path) { return quiver_from_json(read_json_file(path)); }

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (...) {
            throw ValidationError("expected a comma-separated integer list, got \"" + s + "\"");
        }
    }
    if (out.empty()) throw ValidationError("empty integer list");
    return out;
}

std::vector<long> parse_long_list(const std::string& s) {
    auto v = parse_int_list(s);
    return std::vector<long>(v.begin(), v.end());
}

void emit(const Options& opt, const Json& j, const std::string& plain) {
    if (opt.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << plain;
}

std::string report_plain(const CheckReport& r) {
    std::ostringstream os;
    for (auto& row : r.rows) {
        os << (row.pass ? "[PASS] " : "[FAIL] ") << r.identity << ": " << row.label;
        if (!row.pass) os << "  lhs=" << row.lhs << " rhs=" << row.rhs;
        os << "\n";
    }
    os << (r.all_pass ? "all checks passed" : "CHECKS FAILED") << " (" << r.rows.size()
       << " cases)\n";
    return os.str();
}

// ---------------------------------------------------------------- suites --

CheckReport suite_2segal(int bound) {
    CheckReport out;
    out.identity = "unital 2-Segal counting identity (lower and upper maps, n=3)";
    for (int q : {2, 3}) {
        for (auto Q : {Quiver::a1(), Quiver::a2()}) {
            QuiverRepContext ctx(Q, q);
            QuiverCountingContext cc(ctx);
            auto rep = verify_2segal_counting(cc, bound);
            std::string label = "rep_F" + std::to_string(q) + "(" +
                                (Q.num_vertices() == 1 ? "A_1" : "A_2") + ") bound " +
                                std::to_string(bound);
            out.add(label, "", "", rep.all_pass);
            for (auto& row : rep.rows)
                if (!row.pass)
                    out.add(label + " @ " + row.map_name + row.grade,
                            rational_to_string(row.lhs), rational_to_string(row.rhs), false);
        }
    }
    PointedSetContext ps;
    PointedCountingContext pc(ps);
    auto rep = verify_2segal_counting(pc, bound);
    out.add("pointed sets bound " + std::to_string(bound), "", "", rep.all_pass);
    return out;
}

CheckReport suite_assoc(int bound) {
    CheckReport out;
    out.identity = "Hall product associativity";
    for (auto Q : {Quiver::a1(), Quiver::a2()}) {
        QuiverRepContext ctx(Q, 2);
        auto rep = verify_hall_associativity(ctx, bound);
        out.add((Q.num_vertices() == 1 ? "A_1" : "A_2") + std::string(" over F_2 bound ") +
                    std::to_string(bound),
                "", "", rep.all_pass);
    }
    return out;
}

CheckReport suite_integration(const std::optional<Quiver>& quiver, std::optional<int> q,
                              std::optional<int> bound) {
    CheckReport out;
    out.identity = "integration morphism (algebra map into the twisted group ring)";
    std::vector<std::tuple<Quiver, int, int, std::string>> grid;
    if (quiver) {
        grid.emplace_back(*quiver, q.value_or(2), bound.value_or(3), "custom quiver");
    } else {
        for (auto& [Q, name] : std::vector<std::pair<Quiver, std::string>>{
                 {Quiver::a1(), "A_1"}, {Quiver::a2(), "A_2"}, {Quiver::kronecker(2), "Kronecker"}}) {
            grid.emplace_back(Q, 2, bound.value_or(3), name + " over F_2");
            grid.emplace_back(Q, 3, bound.value_or(2), name + " over F_3");
        }
    }
    for (auto& [Q, qq, bb, name] : grid) {
        QuiverRepContext ctx(Q, qq);
        auto rep = verify_integration_morphism(ctx, bb);
        out.add(name + " bound " + std::to_string(bb), "", "", rep.all_pass);
        for (auto& row : rep.rows)
            if (!row.pass) out.add(name + " @ " + row.label, row.lhs, row.rhs, false);
    }
    return out;
}

CheckReport suite_recursion() {
    CheckReport out;
    out.identity = "HN recursion: HNrec partition identity + Reineke inversion + oracle";
    std::vector<std::pair<Quiver, std::string>> quivers = {
        {Quiver::a1(), "A_1"}, {Quiver::a2(), "A_2"}, {Quiver::kronecker(2), "Kronecker"}};
    for (auto& [Q, name] : quivers) {
        std::vector<StabilityData> thetas;
        if (Q.num_vertices() == 1)
            thetas = {StabilityData({1})};
        else
            thetas = {StabilityData({1, 0}), StabilityData({0, 1}), StabilityData({1, -1})};
        for (auto& th : thetas) {
            SemistableSolver solver(quiver_slope_context(Q, th));
            for (int q : {2, 3}) {
                QuiverRepContext ctx(Q, q);
                DimVec cap(Q.num_vertices(), 3);
                for (auto& a : effective_vectors_below(cap)) {
                    if (total_dim(a) > 3) continue;
                    std::ostringstream label;
                    label << name << " theta=(";
                    for (size_t i = 0; i < th.theta.size(); ++i)
                        label << (i ? "," : "") << th.theta[i];
                    label << ") q=" << q << " alpha=" << dim_to_string(a);
                    // HNrec partition identity
                    auto strat = hn_stratification(ctx, a, th);
                    out.add("HNrec partition identity: " + label.str(),
                            rational_to_string(strat.total), "sum of strata",
                            strat.partition_ok);
                    // recursion = inversion; evaluation = brute force
                    MotivicScalar ss = solver.semistable_class(a, SsMethod::recursive);
                    MotivicScalar inv = solver.semistable_class(a, SsMethod::inversion);
                    out.add("HNinv inversion agreement: " + label.str(), ss.to_string(),
                            inv.to_string(), ss == inv);
                    Rational bf = count_semistable_bruteforce(ctx, a, th);
                    out.add("counting oracle: " + label.str(),
                            rational_to_string(ss.evaluate(q)), rational_to_string(bf),
                            ss.evaluate(q) == bf);
                }
            }
        }
    }
    return out;
}

CheckReport suite_periodic(Budget& budget) {
    CheckReport out;
    out.identity = "flag-variety formula and period-domain consistency";
    // flag counts r <= 4
    for (int q : {2, 3}) {
        for (int r = 1; r <= 4; ++r) {
            std::function<void(int, std::vector<int>&)> rec = [&](int rest,
                                                                  std::vector<int>& acc) {
                if (rest == 0) {
                    FlagType ft{r, acc, {}};
                    Int flags = count_flags_bruteforce(ft, q, budget);
                    bool ok = gaussian_multinomial(r, acc).evaluate(Int(q)) == flags;
                    std::ostringstream label;
                    label << "EPchar(F) flag count r=" << r << " delta=";
                    for (size_t i = 0; i < acc.size(); ++i) label << (i ? "," : "") << acc[i];
                    label << " q=" << q;
                    out.add(label.str(), gaussian_multinomial(r, acc).to_string(), flags.str(),
                            ok);
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
    // period domains: F_q rank 2, F_1 rank <= 4; two weight vectors each
    for (int q : {2, 3}) {
        for (std::vector<long> theta : {std::vector<long>{1, 0}, {1, 1}}) {
            FlagType ft{2, {1, 1}, theta};
            auto bf = period_domain_count(ft, PeriodField::Fq, PeriodMode::bruteforce, q, budget);
            auto rc = period_domain_count(ft, PeriodField::Fq, PeriodMode::recursion, q, budget);
            ClassFunction cf = equivariant_period_domain(ft, PeriodField::Fq, q);
            std::string label = "period domain F_" + std::to_string(q) + " theta=(" +
                                std::to_string(theta[0]) + "," + std::to_string(theta[1]) + ")";
            out.add(label + " recursion vs oracle", rational_to_string(rc.count),
                    rational_to_string(bf.count), rc.count == bf.count);
            out.add(label + " equivariant specialization",
                    rational_to_string(cf.dimension_at(Rational(q))),
                    rational_to_string(bf.count), cf.dimension_at(Rational(q)) == bf.count);
        }
    }
    for (int r = 2; r <= 4; ++r) {
        std::vector<int> delta(r, 1);
        for (std::vector<long> theta_full : {std::vector<long>{3, 2, 1, 0}, {1, 1, 1, 1}}) {
            std::vector<long> theta(theta_full.begin(), theta_full.begin() + r);
            FlagType ft{r, delta, theta};
            auto bf = period_domain_count(ft, PeriodField::F1, PeriodMode::bruteforce, 0, budget);
            auto rc = period_domain_count(ft, PeriodField::F1, PeriodMode::recursion, 0, budget);
            ClassFunction cf = equivariant_period_domain(ft, PeriodField::F1, 0);
            std::string label = "period domain F_1 r=" + std::to_string(r) + " theta=(";
            for (size_t i = 0; i < theta.size(); ++i)
                label += (i ? "," : "") + std::to_string(theta[i]);
            label += ")";
            out.add(label + " recursion vs oracle", rational_to_string(rc.count),
                    rational_to_string(bf.count), rc.count == bf.count);
            out.add(label + " equivariant specialization",
                    rational_to_string(cf.dimension_at(Rational(1))),
                    rational_to_string(bf.count), cf.dimension_at(Rational(1)) == bf.count);
        }
    }
    return out;
}

CheckReport suite_characters() {
    CheckReport out;
    out.identity = "character layer: orthogonality, reciprocity, transitivity";
    for (int r = 1; r <= 6; ++r) {
        auto& t = SymCharacterTable::of(r);
        int n = static_cast<int>(t.partitions().size());
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                ok = t.inner(a, b) == (a == b ? Rational(1) : Rational(0));
        out.add("S_" + std::to_string(r) + " table orthonormal", "", "", ok);
    }
    // Frobenius reciprocity with the permutation character, r <= 5
    for (int r = 2; r <= 5; ++r) {
        auto g = FiniteGroupModel::symmetric(r);
        auto p = parabolic_subgroup(g, {r - 1, 1});
        ClassFunction ind = induce(g, p.members, [](int) { return MotivicScalar(1); });
        auto& t = SymCharacterTable::of(r);
        bool ok = true;
        for (size_t l = 0; l < t.partitions().size() && ok; ++l) {
            ClassFunction chi = ClassFunction::sym_irreducible(g, t.partitions()[l]);
            MotivicScalar lhs = ind.inner(chi);
            MotivicScalar rhs(0);
            for (int x : p.members) rhs += chi.at_element(x);
            rhs = rhs / MotivicScalar(Rational(Int(p.members.size())));
            ok = lhs == rhs;
        }
        out.add("Frobenius reciprocity S_" + std::to_string(r - 1) + "xS_1 in S_" +
                    std::to_string(r),
                "", "", ok);
    }
    // transitivity via the cycle-type route
    {
        auto triv = [](const Partition&) { return MotivicScalar(1); };
        auto inner_vals = induce_young_cycle_types(2, {1, 1}, {triv, triv});
        auto parts2 = partitions_of(2);
        auto inner_fun = [&](const Partition& mu) {
            for (size_t i = 0; i < parts2.size(); ++i)
                if (parts2[i] == mu) return inner_vals[i];
            throw ValidationError("unknown class");
        };
        auto direct = induce_young_cycle_types(4, {1, 1, 2}, {triv, triv, triv});
        auto composed = induce_young_cycle_types(4, {2, 2}, {inner_fun, triv});
        out.add("induction transitivity S_(1,1,2) -> S_(2,2) -> S_4", "", "",
                direct == composed);
    }
    // parabolic order formulas
    for (int q : {2, 3}) {
        auto g = FiniteGroupModel::gl2(q);
        bool ok = true;
        for (auto eta : std::vector<std::vector<int>>{{2}, {1, 1}}) {
            auto p = parabolic_subgroup(g, eta);
            ok = ok && p.order() == p.order_formula();
        }
        out.add("parabolic orders in GL_2(F_" + std::to_string(q) + ")", "", "", ok);
    }
    for (int r = 2; r <= 5; ++r) {
        auto g = FiniteGroupModel::symmetric(r);
        auto p = parabolic_subgroup(g, {r - 1, 1});
        out.add("Young subgroup order in S_" + std::to_string(r), "", "",
                p.order() == p.order_formula());
    }
    return out;
}

// ------------------------------------------------------------------ main --

int run(int argc, char** argv) {
    CLI::App app{
        "hallq: exact Hall algebras, Harder-Narasimhan recursions and "
        "(equivariant) point counts of quiver and flag moduli over F_q and F_1"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("HALL_BUDGET")) {
        try {
            opt.budget = std::stoll(env);
        } catch (...) {
            throw ValidationError("HALL_BUDGET: not an integer");
        }
    }
    app.add_flag("--json", opt.json, "emit machine-readable JSON");
    app.add_option("--budget", opt.budget,
                   "enumeration budget in raw points (overrides HALL_BUDGET)");

    // euler
    auto* euler = app.add_subcommand("euler", "Euler form psi(x,y) of a quiver");
    std::string euler_quiver, euler_x, euler_y;
    euler->add_option("--quiver", euler_quiver, "quiver JSON file")->required();
    euler->add_option("--x", euler_x, "dimension vector, comma-separated")->required();
    euler->add_option("--y", euler_y, "dimension vector, comma-separated")->required();

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "iso classes of representations");
    std::string en_quiver, en_alpha;
    int en_q = 2;
    enumerate->add_option("--quiver", en_quiver)->required();
    enumerate->add_option("--alpha", en_alpha)->required();
    enumerate->add_option("--q", en_q, "prime field size")->required();

    // hall-product
    auto* hallprod = app.add_subcommand("hall-product", "convolution product of Hall elements");
    std::string hp_quiver, hp_left, hp_right;
    int hp_q = 2;
    hallprod->add_option("--quiver", hp_quiver)->required();
    hallprod->add_option("--q", hp_q)->required();
    hallprod->add_option("--left", hp_left, "HallElement JSON file")->required();
    hallprod->add_option("--right", hp_right, "HallElement JSON file")->required();

    // integrate
    auto* integrate = app.add_subcommand("integrate", "Reineke's counting integration map");
    std::string in_quiver, in_elem;
    int in_q = 2, in_trunc = 6;
    integrate->add_option("--quiver", in_quiver)->required();
    integrate->add_option("--q", in_q)->required();
    integrate->add_option("--element", in_elem, "HallElement JSON file")->required();
    integrate->add_option("--trunc", in_trunc, "series truncation (total dimension)");

    // motivic
    auto* motivic = app.add_subcommand("motivic", "motivic class of the moduli stack M_alpha");
    std::string mo_quiver, mo_alpha;
    motivic->add_option("--quiver", mo_quiver)->required();
    motivic->add_option("--alpha", mo_alpha)->required();

    // hn-type
    auto* hntype = app.add_subcommand("hn-type", "HN types of a class");
    std::string ht_alpha, ht_theta, ht_rank, ht_quiver;
    int ht_q = 0;
    hntype->add_option("--alpha", ht_alpha)->required();
    hntype->add_option("--theta", ht_theta)->required();
    hntype->add_option("--rank", ht_rank, "rank weights (default all ones)");
    hntype->add_option("--quiver", ht_quiver,
                       "with --q: also report stratum counts per type");
    hntype->add_option("--q", ht_q);

    // hn-filtration
    auto* hnfil = app.add_subcommand("hn-filtration", "HN filtration of a representation");
    std::string hf_quiver, hf_rep, hf_theta;
    hnfil->add_option("--quiver", hf_quiver)->required();
    hnfil->add_option("--rep", hf_rep, "QuiverRep JSON file")->required();
    hnfil->add_option("--theta", hf_theta)->required();

    // semistable
    auto* ss = app.add_subcommand("semistable", "motivic class / count of the semistable locus");
    std::string ss_quiver, ss_alpha, ss_theta, ss_method = "recursive";
    int ss_q = 0;
    ss->add_option("--quiver", ss_quiver)->required();
    ss->add_option("--alpha", ss_alpha)->required();
    ss->add_option("--theta", ss_theta)->required();
    ss->add_option("--method", ss_method, "recursive | inversion | bruteforce");
    ss->add_option("--q", ss_q, "field size (bruteforce, or evaluation when given)");

    // flag
    auto* flag = app.add_subcommand("flag", "flag variety class and parabolic order");
    int fl_r = 0;
    std::string fl_delta;
    flag->add_option("--r", fl_r)->required();
    flag->add_option("--delta", fl_delta, "composition, deep step first")->required();

    // period-domain
    auto* period = app.add_subcommand("period-domain", "semistable flag counts");
    int pd_r = 0, pd_q = 2;
    std::string pd_delta, pd_theta, pd_field = "fq", pd_mode = "bruteforce";
    period->add_option("--r", pd_r)->required();
    period->add_option("--delta", pd_delta)->required();
    period->add_option("--theta", pd_theta)->required();
    period->add_option("--field", pd_field, "fq | f1");
    period->add_option("--mode", pd_mode, "bruteforce | recursion");
    period->add_option("--q", pd_q);

    // equivariant
    auto* equi = app.add_subcommand("equivariant", "equivariant period-domain character");
    int eq_r = 0, eq_q = 2;
    std::string eq_delta, eq_theta, eq_field = "fq";
    equi->add_option("--r", eq_r)->required();
    equi->add_option("--delta", eq_delta)->required();
    equi->add_option("--theta", eq_theta)->required();
    equi->add_option("--field", eq_field, "fq | f1");
    equi->add_option("--q", eq_q);

    // hecke
    auto* hecke = app.add_subcommand("hecke", "double coset Hecke structure constants");
    std::string hk_group, hk_sub;
    hecke->add_option("--group", hk_group, "multiplication table JSON file")->required();
    hecke->add_option("--subgroup", hk_sub, "element indices, comma-separated")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string v_suite, v_quiver;
    std::optional<int> v_q, v_bound;
    verify->add_option("--suite", v_suite,
                       "2segal | assoc | integration | recursion | periodic | characters")
        ->required();
    verify->add_option("--quiver", v_quiver, "restrict to one quiver (integration suite)");
    int v_q_raw = -1, v_bound_raw = -1;
    verify->add_option("--q", v_q_raw);
    verify->add_option("--bound", v_bound_raw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (v_q_raw >= 0) v_q = v_q_raw;
    if (v_bound_raw >= 0) v_bound = v_bound_raw;

    Budget budget(opt.budget);

    if (*euler) {
        Quiver Q = load_quiver(euler_quiver);
        QuiverRepContext ctx(Q, 2, budget);
        auto x = parse_int_list(euler_x), y = parse_int_list(euler_y);
        long v = ctx.euler_form(x, y);
        Json j = Json::object();
        j["psi"] = v;
        j["chi_op"] = ctx.chi_op(x, y);
        emit(opt, j, "psi(x,y) = " + std::to_string(v) + "\n");
        return 0;
    }

    if (*enumerate) {
        Quiver Q = load_quiver(en_quiver);
        QuiverRepContext ctx(Q, en_q, budget);
        auto alpha = parse_int_list(en_alpha);
        auto& classes = ctx.iso_classes(alpha);
        Json j = Json::object();
        j["quiver"] = to_json(Q);
        j["q"] = en_q;
        j["alpha"] = alpha;
        Json arr = Json::array();
        std::ostringstream plain;
        plain << classes.size() << " iso classes in dimension " << dim_to_string(alpha) << "\n";
        Rational total = 0;
        for (auto& cls : classes) {
            Json row = Json::object();
            row["rep"] = to_json(cls.rep);
            row["aut_order"] = cls.aut_order.str();
            row["orbit_size"] = cls.orbit_size.str();
            arr.push_back(row);
            plain << "  #Aut = " << cls.aut_order.str() << "  orbit = " << cls.orbit_size.str()
                  << "\n";
            total += Rational(1, cls.aut_order);
        }
        j["classes"] = arr;
        j["groupoid_count"] = rational_to_json(total);
        plain << "groupoid count sum 1/#Aut = " << rational_to_string(total) << "\n";
        emit(opt, j, plain.str());
        return 0;
    }

    if (*hallprod) {
        Quiver Q = load_quiver(hp_quiver);
        QuiverRepContext ctx(Q, hp_q, budget);
        HallElement a = hall_element_from_json(read_json_file(hp_left), ctx);
        HallElement b = hall_element_from_json(read_json_file(hp_right), ctx);
        HallElement p = hall_product(a, b);
        Json j = to_json(p);
        std::ostringstream plain;
        plain << p.coeffs().size() << " classes in the product\n";
        for (auto& [k, v] : p.coeffs())
            plain << "  " << dim_to_string(class_key_dim(ctx, k)) << "#" << "  coeff "
                  << rational_to_string(v) << "\n";
        emit(opt, j, plain.str());
        return 0;
    }

    if (*integrate) {
        Quiver Q = load_quiver(in_quiver);
        QuiverRepContext ctx(Q, in_q, budget);
        HallElement e = hall_element_from_json(read_json_file(in_elem), ctx);
        CountingSeries s = integrate_counting(e, in_trunc);
        std::ostringstream plain;
        for (auto& [a, v] : s.coeffs())
            plain << rational_to_string(v) << " * T^" << dim_to_string(a) << "\n";
        if (s.coeffs().empty()) plain << "0\n";
        emit(opt, to_json(s), plain.str());
        return 0;
    }

    if (*motivic) {
        Quiver Q = load_quiver(mo_quiver);
        MotivicScalar m = motivic_class_total(Q, parse_int_list(mo_alpha));
        emit(opt, to_json(m), "[M_alpha] = " + m.to_string() + "\n");
        return 0;
    }

    if (*hntype) {
        StabilityData s(parse_long_list(ht_theta),
                        ht_rank.empty() ? std::vector<long>{} : parse_long_list(ht_rank));
        auto alpha = parse_int_list(ht_alpha);
        auto types = hn_types(alpha, s);
        Json arr = Json::array();
        std::ostringstream plain;
        for (auto& t : types) {
            Json row = Json::array();
            std::ostringstream line;
            for (auto& a : t) {
                row.push_back(a);
                line << dim_to_string(a) << " ";
            }
            arr.push_back(row);
            plain << line.str() << "\n";
        }
        Json j = Json::object();
        j["types"] = arr;
        if (!ht_quiver.empty()) {
            // HN report: classify every iso class by its HN type
            if (ht_q < 2) throw ValidationError("hn-type stratification needs --q");
            QuiverRepContext ctx(load_quiver(ht_quiver), ht_q, budget);
            auto strat = hn_stratification(ctx, alpha, s);
            j["report"] = to_json(strat);
            for (auto& row : strat.strata) {
                plain << "stratum ";
                for (auto& t : row.type) plain << dim_to_string(t) << " ";
                plain << "count " << rational_to_string(row.count) << "\n";
            }
            plain << "total " << rational_to_string(strat.total)
                  << (strat.partition_ok ? " (partition identity holds)\n"
                                         : " PARTITION IDENTITY FAILED\n");
            if (!strat.partition_ok)
                throw ConsistencyError("HNrec partition identity failed at alpha=" +
                                       dim_to_string(alpha));
        }
        emit(opt, j, plain.str());
        return 0;
    }

    if (*hnfil) {
        Quiver Q = load_quiver(hf_quiver);
        QuiverRep r = rep_from_json(read_json_file(hf_rep));
        QuiverRepContext ctx(Q, r.q, budget);
        r = ctx.conform(std::move(r));
        StabilityData s(parse_long_list(hf_theta));
        auto f = hn_filtration(ctx, r, s);
        Json j = Json::object();
        Json steps = Json::array();
        std::ostringstream plain;
        for (auto& st : f.steps) {
            Json row = Json::object();
            row["class"] = st.cls;
            row["slope"] = st.slope.to_string();
            row["subquotient"] = to_json(st.subquot);
            steps.push_back(row);
            plain << "step " << dim_to_string(st.cls) << " slope " << st.slope.to_string()
                  << "\n";
        }
        j["steps"] = steps;
        Json flags = Json::array();
        for (auto& d : f.flag_dims) flags.push_back(d);
        j["flag_dims"] = flags;
        emit(opt, j, plain.str());
        return 0;
    }

    if (*ss) {
        Quiver Q = load_quiver(ss_quiver);
        auto alpha = parse_int_list(ss_alpha);
        StabilityData s(parse_long_list(ss_theta));
        if (ss_method == "bruteforce") {
            if (ss_q < 2) throw ValidationError("bruteforce needs --q");
            QuiverRepContext ctx(Q, ss_q, budget);
            Rational c = count_semistable_bruteforce(ctx, alpha, s);
            Json j = Json::object();
            j["count"] = rational_to_json(c);
            emit(opt, j, "sum 1/#Aut over semistables = " + rational_to_string(c) + "\n");
            return 0;
        }
        SsMethod method;
        if (ss_method == "recursive")
            method = SsMethod::recursive;
        else if (ss_method == "inversion")
            method = SsMethod::inversion;
        else
            throw ValidationError("unknown method \"" + ss_method + "\"");
        SemistableSolver solver(quiver_slope_context(Q, s));
        MotivicScalar m = solver.semistable_class(alpha, method);
        // both methods must agree; a mismatch is an internal error
        MotivicScalar other = solver.semistable_class(
            alpha, method == SsMethod::recursive ? SsMethod::inversion : SsMethod::recursive);
        if (m != other)
            throw ConsistencyError("semistable class: methods disagree at " +
                                   dim_to_string(alpha));
        Json j = to_json(m);
        std::ostringstream plain;
        plain << "[ssM_alpha] = " << m.to_string() << "\n";
        if (ss_q >= 2) {
            j = Json::object();
            j["class"] = to_json(m);
            j["at_q"] = rational_to_json(m.evaluate(ss_q));
            plain << "at q=" << ss_q << ": " << rational_to_string(m.evaluate(ss_q)) << "\n";
        }
        emit(opt, j, plain.str());
        return 0;
    }

    if (*flag) {
        FlagType ft{fl_r, parse_int_list(fl_delta), {}};
        IntPoly g = gaussian_multinomial(fl_r, ft.delta);
        MotivicScalar p = parabolic_order_class(ft.delta);
        MotivicScalar cls = flag_groupoid_class(ft);
        Json j = Json::object();
        j["gaussian"] = to_json(g);
        j["parabolic_order"] = to_json(p);
        j["groupoid_class"] = to_json(cls);
        emit(opt, j,
             "gaussian multinomial = " + g.to_string() + "\nparabolic order = " + p.to_string() +
                 "\ngroupoid class = " + cls.to_string() + "\n");
        return 0;
    }

    if (*period) {
        FlagType ft{pd_r, parse_int_list(pd_delta), parse_long_list(pd_theta)};
        PeriodField field;
        if (pd_field == "fq")
            field = PeriodField::Fq;
        else if (pd_field == "f1")
            field = PeriodField::F1;
        else
            throw ValidationError("unknown field \"" + pd_field + "\" (fq or f1)");
        PeriodMode mode;
        if (pd_mode == "bruteforce")
            mode = PeriodMode::bruteforce;
        else if (pd_mode == "recursion")
            mode = PeriodMode::recursion;
        else
            throw ValidationError("unknown mode \"" + pd_mode + "\"");
        auto res = period_domain_count(ft, field, mode, pd_q, budget);
        Json j = Json::object();
        j["field"] = pd_field;
        j["mode"] = pd_mode;
        j["count"] = rational_to_json(res.count);
        j["polynomial"] = to_json(res.polynomial);
        emit(opt, j,
             "semistable flags = " + rational_to_string(res.count) +
                 (mode == PeriodMode::recursion
                      ? "\ncounting polynomial = " + res.polynomial.to_string()
                      : "") +
                 "\n");
        return 0;
    }

    if (*equi) {
        FlagType ft{eq_r, parse_int_list(eq_delta), parse_long_list(eq_theta)};
        PeriodField field = eq_field == "f1" ? PeriodField::F1 : PeriodField::Fq;
        ClassFunction f = equivariant_period_domain(ft, field, eq_q);
        std::ostringstream plain;
        plain << "character of " << f.group()->name() << " (values in t)\n";
        for (int c = 0; c < f.group()->num_classes(); ++c)
            plain << "  " << f.group()->class_label(c) << ": " << f.at_class(c).to_string("t")
                  << "\n";
        emit(opt, to_json(f), plain.str());
        return 0;
    }

    if (*hecke) {
        FiniteGroupTable g = group_from_json(read_json_file(hk_group));
        HeckeAlgebra h = hecke_structure_constants(g, parse_int_list(hk_sub));
        std::ostringstream plain;
        plain << h.rank << " double cosets; associative: "
              << (h.is_associative() ? "yes" : "NO") << "\n";
        emit(opt, to_json(h), plain.str());
        if (!h.is_associative()) throw ConsistencyError("Hecke constants not associative");
        return 0;
    }

    if (*verify) {
        CheckReport rep;
        if (v_suite == "2segal")
            rep = suite_2segal(v_bound.value_or(3));
        else if (v_suite == "assoc")
            rep = suite_assoc(v_bound.value_or(3));
        else if (v_suite == "integration")
            rep = suite_integration(
                v_quiver.empty() ? std::nullopt : std::optional<Quiver>(load_quiver(v_quiver)),
                v_q, v_bound);
        else if (v_suite == "recursion")
            rep = suite_recursion();
        else if (v_suite == "periodic")
            rep = suite_periodic(budget);
        else if (v_suite == "characters")
            rep = suite_characters();
        else
            throw ValidationError("unknown suite \"" + v_suite + "\"");
        emit(opt, to_json(rep), report_plain(rep));
        if (!rep.all_pass)
            throw ConsistencyError("suite " + v_suite + " failed: " + rep.identity);
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return 4;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
