// JSON encodings for the exact types: rationals as strings, forms and field
// elements by coefficient, lattice cosets by basis/shift/unit over a shared
// discriminant.  Parsers validate shape and report malformed input as
// ParseError naming the offending location.
#pragma once

#include <string>

#include "json.hpp"

#include "itheta/hecke.hpp"
#include "itheta/orbits.hpp"
#include "itheta/periodic.hpp"
#include "itheta/qseries.hpp"
#include "itheta/quadfield.hpp"
#include "itheta/quadform.hpp"
#include "itheta/relations.hpp"

namespace itheta {

using Json = nlohmann::json;

// Reads and parses a whole file; ParseError carries the file name and the
// parser's position report on malformed input.
Json load_json_file(const std::string& path);

Json qf_to_json(const QuadForm& Q);      // {"a":"1","b":"5/2","c":"1"}
QuadForm qf_from_json(const Json& j);

// {"period":3,"values":[{"m":0,"n":1,"v":"1"},...]}, nonzero entries only.
Json pf_to_json(const PeriodicFunction& f);
PeriodicFunction pf_from_json(const Json& j);

// {"precision":9,"terms":[{"exp":1,"coeff":"2"},...]}, ascending exponents.
Json qs_to_json(const QSeries& s);
QSeries qs_from_json(const Json& j);

Json qfe_to_json(const QuadFieldElem& z);  // {"x":"5/2","y":"1","D":"21/4"}
QuadFieldElem qfe_from_json(const Json& j);

// {"D":"21/4","basis":[{"x":"5/2","y":"1"},{"x":"1","y":"0"}],
//  "shift":{"x":"0","y":"0"},"d":"1","epsilon":{"x":"23/2","y":"5"}};
// basis, shift and epsilon share the top-level discriminant.
Json coset_to_json(const HeckeCoset& C);
HeckeCoset coset_from_json(const Json& j);

Json orbit_to_json(const OrbitRecord& O);
Json report_to_json(const RelationReport& r);  // kernel as rational strings

}  // namespace itheta
