#pragma once

#include <json.hpp>

#include "hallq/class_function.hpp"
#include "hallq/flags.hpp"
#include "hallq/hall.hpp"
#include "hallq/hecke.hpp"
#include "hallq/integration.hpp"
#include "hallq/twisted_series.hpp"

namespace hallq {

/// All machine-readable output uses ordered JSON so that re-running a
/// command reproduces its output byte for byte.
using Json = nlohmann::ordered_json;

// IntPoly <-> {"<exp>": "<coeff>", ...}
Json to_json(const IntPoly& p);
IntPoly intpoly_from_json(const Json& j);

// MotivicScalar <-> {"num": ..., "den": ...}
Json to_json(const MotivicScalar& s);
MotivicScalar motivic_from_json(const Json& j);

// Quiver <-> {"vertices": ["1","2"], "arrows": [{"src":"1","tgt":"2"}]}
Json to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

// QuiverRep <-> {"q":2, "dim":[1,1], "mats":[[[1]]]} (row-major matrices)
Json to_json(const QuiverRep& r);
QuiverRep rep_from_json(const Json& j);

// group <-> {"table": [[...]]} or a bare array of arrays
Json to_json(const FiniteGroupTable& g);
FiniteGroupTable group_from_json(const Json& j);

// HallElement <-> {"context": {...}, "coeffs": [{"class": <rep>, "value": "a/b"}]}
Json to_json(const HallElement& e);
HallElement hall_element_from_json(const Json& j, const QuiverRepContext& ctx);

// TwistedSeries <-> {"base": ..., "chi_op": [[...]], "trunc": N,
//                    "coeffs": [{"alpha": [...], "value": ...}]}
Json to_json(const CountingSeries& s);
Json to_json(const MotivicSeries& s);

// StabilityData <-> {"theta": [...], "rank": [...]}
Json to_json(const StabilityData& s);
StabilityData stability_from_json(const Json& j);

// ClassFunction <-> {"group": "S_3", "classes": [...], "values": [...]}
Json to_json(const ClassFunction& f);

Json to_json(const CheckReport& r);
Json to_json(const HNStratification& s);
Json to_json(const HeckeAlgebra& h);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

}  // namespace hallq
