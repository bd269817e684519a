#include "hallq/json_io.hpp"

#include <algorithm>

namespace hallq {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw ValidationError("malformed JSON: " + what);
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

}  // namespace

Json rational_to_json(const Rational& r) { return rational_to_string(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    bad("rational must be an integer or \"num/den\" string");
}

Json to_json(const IntPoly& p) {
    Json j = Json::object();
    for (auto& [e, c] : p.coeffs()) j[std::to_string(e)] = c.str();
    return j;
}

IntPoly intpoly_from_json(const Json& j) {
    if (!j.is_object()) bad("polynomial must be an object {exp: coeff}");
    IntPoly p;
    for (auto& [k, v] : j.items()) {
        int e;
        try {
            e = std::stoi(k);
        } catch (...) {
            bad("polynomial exponent \"" + k + "\"");
        }
        if (e < 0) bad("negative polynomial exponent");
        Int c;
        if (v.is_number_integer())
            c = Int(v.get<long long>());
        else if (v.is_string())
            c = Int(v.get<std::string>());
        else
            bad("polynomial coefficient must be an integer or string");
        p.set(e, c);
    }
    return p;
}

Json to_json(const MotivicScalar& s) {
    Json j = Json::object();
    j["num"] = to_json(s.num());
    j["den"] = to_json(s.den());
    return j;
}

MotivicScalar motivic_from_json(const Json& j) {
    return MotivicScalar(intpoly_from_json(field(j, "num")), intpoly_from_json(field(j, "den")));
}

Json to_json(const Quiver& q) {
    Json j = Json::object();
    j["vertices"] = q.vertices;
    Json arr = Json::array();
    for (auto& [s, t] : q.arrows) {
        Json a = Json::object();
        a["src"] = q.vertices[s];
        a["tgt"] = q.vertices[t];
        arr.push_back(a);
    }
    j["arrows"] = arr;
    return j;
}

Quiver quiver_from_json(const Json& j) {
    Quiver q;
    for (auto& v : field(j, "vertices")) {
        if (!v.is_string()) bad("vertex labels must be strings");
        q.vertices.push_back(v.get<std::string>());
    }
    auto index_of = [&](const std::string& label) {
        auto it = std::find(q.vertices.begin(), q.vertices.end(), label);
        if (it == q.vertices.end()) bad("unknown vertex \"" + label + "\"");
        return static_cast<int>(it - q.vertices.begin());
    };
    for (auto& a : field(j, "arrows"))
        q.arrows.emplace_back(index_of(field(a, "src").get<std::string>()),
                              index_of(field(a, "tgt").get<std::string>()));
    q.validate();
    return q;
}

Json to_json(const QuiverRep& r) {
    Json j = Json::object();
    j["q"] = r.q;
    j["dim"] = r.dim;
    Json mats = Json::array();
    for (auto& m : r.mats) {
        Json rows = Json::array();
        for (int i = 0; i < m.rows; ++i) {
            Json row = Json::array();
            for (int c = 0; c < m.cols; ++c) row.push_back(static_cast<int>(m.at(i, c)));
            rows.push_back(row);
        }
        mats.push_back(rows);
    }
    j["mats"] = mats;
    return j;
}

QuiverRep rep_from_json(const Json& j) {
    QuiverRep r;
    r.q = field(j, "q").get<int>();
    for (auto& d : field(j, "dim")) r.dim.push_back(d.get<int>());
    for (auto& mj : field(j, "mats")) {
        if (!mj.is_array()) bad("matrix must be an array of rows");
        int rows = static_cast<int>(mj.size());
        int cols = rows == 0 ? 0 : static_cast<int>(mj.at(0).size());
        FqMat m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            if (static_cast<int>(mj.at(i).size()) != cols) bad("ragged matrix");
            for (int c = 0; c < cols; ++c) {
                int v = mj.at(i).at(c).get<int>();
                if (v < 0) bad("negative matrix entry");
                m.at(i, c) = static_cast<std::uint8_t>(v % r.q);
                if (v >= r.q) bad("matrix entry not reduced mod q");
            }
        }
        r.mats.push_back(std::move(m));
    }
    return r;
}

Json to_json(const FiniteGroupTable& g) {
    Json j = Json::object();
    Json t = Json::array();
    for (auto& row : g.mul) t.push_back(row);
    j["table"] = t;
    return j;
}

FiniteGroupTable group_from_json(const Json& j) {
    const Json* t = &j;
    if (j.is_object()) t = &field(j, "table");
    if (!t->is_array()) bad("group table must be an array of arrays");
    FiniteGroupTable g;
    for (auto& row : *t) g.mul.push_back(row.get<std::vector<int>>());
    int n = g.size();
    // locate identity and inverses, then validate
    g.identity = -1;
    for (int c = 0; c < n && g.identity < 0; ++c) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            if (g.mul[c].size() != static_cast<size_t>(n) ||
                g.mul[x].size() != static_cast<size_t>(n))
                bad("group table not square");
            ok = g.mul[c][x] == x && g.mul[x][c] == x;
        }
        if (ok) g.identity = c;
    }
    if (g.identity < 0) bad("group table has no identity");
    g.inv.assign(n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (g.mul[x][y] == g.identity && g.mul[y][x] == g.identity) g.inv[x] = y;
    for (int x = 0; x < n; ++x)
        if (g.inv[x] < 0) bad("group table has a non-invertible element");
    g.validate();
    return g;
}

Json to_json(const HallElement& e) {
    Json j = Json::object();
    Json ctx = Json::object();
    ctx["quiver"] = to_json(e.ctx().quiver());
    ctx["q"] = e.ctx().q();
    j["context"] = ctx;
    Json coeffs = Json::array();
    for (auto& [key, v] : e.coeffs()) {
        Json row = Json::object();
        // key encodes the canonical representative; re-expand it
        DimVec d = class_key_dim(e.ctx(), key);
        for (auto& cls : e.ctx().iso_classes(d))
            if (cls.rep.byte_key() == key) {
                row["class"] = to_json(cls.rep);
                break;
            }
        row["value"] = rational_to_json(v);
        coeffs.push_back(row);
    }
    j["coeffs"] = coeffs;
    return j;
}

HallElement hall_element_from_json(const Json& j, const QuiverRepContext& ctx) {
    HallElement e(ctx);
    for (auto& row : field(j, "coeffs")) {
        QuiverRep r = ctx.conform(rep_from_json(field(row, "class")));
        e.add(ctx.class_key(r), rational_from_json(field(row, "value")));
    }
    return e;
}

namespace {

template <class S>
Json series_to_json(const TwistedSeries<S>& s, const char* base,
                    Json (*scalar_to_json)(const S&)) {
    Json j = Json::object();
    j["base"] = base;
    j["chi_op"] = s.chi_op();
    j["trunc"] = s.trunc();
    Json coeffs = Json::array();
    for (auto& [a, v] : s.coeffs()) {
        Json row = Json::object();
        row["alpha"] = a;
        row["value"] = scalar_to_json(v);
        coeffs.push_back(row);
    }
    j["coeffs"] = coeffs;
    return j;
}

Json rational_adapter(const Rational& r) { return rational_to_json(r); }
Json motivic_adapter(const MotivicScalar& s) { return to_json(s); }

}  // namespace

Json to_json(const CountingSeries& s) {
    Json j = series_to_json(s, "rational", &rational_adapter);
    j["q"] = rational_to_string(Rational(1) / s.zeta());
    return j;
}

Json to_json(const MotivicSeries& s) { return series_to_json(s, "motivic", &motivic_adapter); }

Json to_json(const StabilityData& s) {
    Json j = Json::object();
    j["theta"] = s.theta;
    j["rank"] = s.rank_weights;
    return j;
}

StabilityData stability_from_json(const Json& j) {
    std::vector<long> theta, rank;
    for (auto& t : field(j, "theta")) theta.push_back(t.get<long>());
    if (j.contains("rank"))
        for (auto& r : j.at("rank")) rank.push_back(r.get<long>());
    return StabilityData(std::move(theta), std::move(rank));
}

Json to_json(const ClassFunction& f) {
    Json j = Json::object();
    j["group"] = f.group()->name();
    Json classes = Json::array(), values = Json::array();
    for (int c = 0; c < f.group()->num_classes(); ++c) {
        classes.push_back(f.group()->class_label(c));
        values.push_back(to_json(f.at_class(c)));
    }
    j["classes"] = classes;
    j["values"] = values;
    return j;
}

Json to_json(const CheckReport& r) {
    Json j = Json::object();
    j["identity"] = r.identity;
    j["all_pass"] = r.all_pass;
    Json rows = Json::array();
    for (auto& row : r.rows) {
        Json rj = Json::object();
        rj["case"] = row.label;
        rj["lhs"] = row.lhs;
        rj["rhs"] = row.rhs;
        rj["pass"] = row.pass;
        rows.push_back(rj);
    }
    j["checks"] = rows;
    return j;
}

Json to_json(const HNStratification& s) {
    Json j = Json::object();
    Json strata = Json::array();
    for (auto& row : s.strata) {
        Json rj = Json::object();
        Json type = Json::array();
        for (auto& t : row.type) type.push_back(t);
        rj["type"] = type;
        rj["count"] = rational_to_json(row.count);
        strata.push_back(rj);
    }
    j["strata"] = strata;
    j["total"] = rational_to_json(s.total);
    j["partition_ok"] = s.partition_ok;
    return j;
}

Json to_json(const HeckeAlgebra& h) {
    Json j = Json::object();
    j["rank"] = h.rank;
    j["basis"] = h.basis_labels;
    j["unit"] = h.unit_index();
    Json c = Json::array();
    for (int a = 0; a < h.rank; ++a) {
        Json rows = Json::array();
        for (int b = 0; b < h.rank; ++b) {
            Json row = Json::array();
            for (int d = 0; d < h.rank; ++d) row.push_back(rational_to_json(h.constants[a][b][d]));
            rows.push_back(row);
        }
        c.push_back(rows);
    }
    j["constants"] = c;
    return j;
}

}  // namespace hallq
