#pragma once

// JSON encodings.  Roots of unity are "zN^k" strings, elements are "a" for a
// cyclic group and "(a,b,...)" otherwise, and cochain tables are objects keyed
// by comma-joined element lists ("1,1,1", "(1,0),(0,1)").  Entries equal to 1
// are omitted from cochain tables.
//
// A category document looks like
//   {"label": "semion", "group": "Z2", "q": {"0": "1", "1": "z4^1"},
//    "cocycle": {"psi": {"1,1,1": "-1"}, "omega": {"1,1": "z4^1"}}}
// where "q" may be replaced by
//   "q_gen": {"values": ["z4^1"], "pairings": [["1"]]}
// (see form_from_generators) and "cocycle" is optional.

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "smatrix/abelian_group.hpp"
#include "smatrix/braided_modules.hpp"
#include "smatrix/cocycle.hpp"
#include "smatrix/metric_category.hpp"

namespace smatrix {

using Json = nlohmann::ordered_json;

/// "1" or "(1,0)"; throws ParseError.
Element parse_element(const AbelianGroup& g, std::string_view text);

Json to_json(const CycloMatrix& m);
Json to_json(const Subgroup& h);
Json to_json(const QuadraticForm& q);
Json to_json(const AbelianCocycle& c);
Json to_json(const PointedBFC& b);
Json to_json(const CheckResult& r);

QuadraticForm form_from_json(const AbelianGroup& g, const Json& j);
AbelianCocycle cocycle_from_json(const AbelianGroup& g, const Json& j);

/// Accepts a category document, or any document with one at "results.category"
/// or "category".  Without a cocycle, small groups get the standard cocycle.
PointedBFC category_from_json(const Json& j);

/// Preset name, "-" for a document on `in`, or a JSON file path.
PointedBFC load_category(std::string_view spec, std::istream& in);

}  // namespace smatrix
