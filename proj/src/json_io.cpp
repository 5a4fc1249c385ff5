// JSON parsing and serialization with location-bearing error reporting.
#include "itheta/json_io.hpp"

#include <fstream>

#include "itheta/errors.hpp"

namespace itheta {

namespace {

const Json& field(const Json& j, const char* key, const char* where) {
  if (!j.is_object())
    throw ParseError(std::string(where) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string(where) + ": missing field \"" + key + "\"");
  return *it;
}

Rational rat_field(const Json& j, const char* key, const char* where) {
  const Json& v = field(j, key, where);
  if (!v.is_string())
    throw ParseError(std::string(where) + ": field \"" + key +
                     "\" must be a rational string");
  return rational_from_string(v.get<std::string>());
}

long int_field(const Json& j, const char* key, const char* where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer())
    throw ParseError(std::string(where) + ": field \"" + key +
                     "\" must be an integer");
  return v.get<long>();
}

Json point_to_json(const std::pair<long, long>& P) {
  return Json::array({P.first, P.second});
}

QuadFieldElem qfe_from_xy(const Json& j, const Rational& D,
                          const char* where) {
  return qfe_make(rat_field(j, "x", where), rat_field(j, "y", where), D);
}

Json qfe_to_xy(const QuadFieldElem& z) {
  return Json{{"x", to_string(z.x)}, {"y", to_string(z.y)}};
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json qf_to_json(const QuadForm& Q) {
  return Json{{"a", to_string(Q.a)}, {"b", to_string(Q.b)},
              {"c", to_string(Q.c)}};
}

QuadForm qf_from_json(const Json& j) {
  return qf_new(rat_field(j, "a", "form"), rat_field(j, "b", "form"),
                rat_field(j, "c", "form"));
}

Json pf_to_json(const PeriodicFunction& f) {
  Json values = Json::array();
  for (const auto& [key, v] : f.vals)
    values.push_back(Json{{"m", key.first},
                          {"n", key.second},
                          {"v", to_string(v)}});
  return Json{{"period", f.N}, {"values", values}};
}

PeriodicFunction pf_from_json(const Json& j) {
  long N = int_field(j, "period", "function");
  if (N < 1)
    throw ParseError("function: period must be positive, got " +
                     std::to_string(N));
  PeriodicFunction f = pf_new(N);
  const Json& values = field(j, "values", "function");
  if (!values.is_array())
    throw ParseError("function: field \"values\" must be an array");
  for (const Json& entry : values)
    pf_set(f, int_field(entry, "m", "function value"),
           int_field(entry, "n", "function value"),
           rat_field(entry, "v", "function value"));
  return f;
}

Json qs_to_json(const QSeries& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms)
    terms.push_back(Json{{"exp", e}, {"coeff", to_string(c)}});
  return Json{{"precision", s.precision}, {"terms", terms}};
}

QSeries qs_from_json(const Json& j) {
  long M = int_field(j, "precision", "series");
  if (M < 1)
    throw ParseError("series: precision must be positive, got " +
                     std::to_string(M));
  QSeries s = qs_new(M);
  const Json& terms = field(j, "terms", "series");
  if (!terms.is_array())
    throw ParseError("series: field \"terms\" must be an array");
  for (const Json& entry : terms) {
    long e = int_field(entry, "exp", "series term");
    if (e < 0 || e >= M)
      throw ParseError("series term: exponent " + std::to_string(e) +
                       " outside [0, " + std::to_string(M) + ")");
    qs_add_term(s, e, rat_field(entry, "coeff", "series term"));
  }
  return s;
}

Json qfe_to_json(const QuadFieldElem& z) {
  Json j = qfe_to_xy(z);
  j["D"] = to_string(z.D);
  return j;
}

QuadFieldElem qfe_from_json(const Json& j) {
  return qfe_from_xy(j, rat_field(j, "D", "field element"), "field element");
}

Json coset_to_json(const HeckeCoset& C) {
  return Json{{"D", to_string(C.lattice.e1.D)},
              {"basis", Json::array({qfe_to_xy(C.lattice.e1),
                                     qfe_to_xy(C.lattice.e2)})},
              {"shift", qfe_to_xy(C.shift)},
              {"d", to_string(C.mult)},
              {"epsilon", qfe_to_xy(C.unit)}};
}

HeckeCoset coset_from_json(const Json& j) {
  Rational D = rat_field(j, "D", "lattice");
  const Json& basis = field(j, "basis", "lattice");
  if (!basis.is_array() || basis.size() != 2)
    throw ParseError("lattice: field \"basis\" must be an array of 2 elements");
  HeckeCoset C{lattice_make(qfe_from_xy(basis[0], D, "lattice basis"),
                            qfe_from_xy(basis[1], D, "lattice basis")),
               qfe_from_xy(field(j, "shift", "lattice"), D, "lattice shift"),
               rat_field(j, "d", "lattice"),
               qfe_from_xy(field(j, "epsilon", "lattice"), D, "lattice unit")};
  return C;
}

Json orbit_to_json(const OrbitRecord& O) {
  return Json{{"representative", point_to_json(O.representative)},
              {"size", O.points.size()},
              {"admissible", O.admissible},
              {"symmetric", O.symmetric},
              {"parity", O.parity},
              {"partner", point_to_json(O.partner)}};
}

Json report_to_json(const RelationReport& r) {
  Json labels = Json::array();
  for (const auto& P : r.series_labels) labels.push_back(point_to_json(P));
  Json series = Json::array();
  for (const auto& s : r.series) series.push_back(qs_to_json(s));
  Json relations = Json::array();
  for (const auto& R : r.symbolic) {
    Json rl = Json::array();
    for (const auto& P : R.labels) rl.push_back(point_to_json(P));
    Json entry{{"kind", relation_kind_name(R.kind)},
               {"labels", rl},
               {"sign", R.sign}};
    if (R.kind == RelationKind::TauT) entry["shear"] = to_string(R.shear);
    relations.push_back(entry);
  }
  auto vectors = [](const std::vector<std::vector<Rational>>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) {
      Json row = Json::array();
      for (const auto& x : v) row.push_back(to_string(x));
      out.push_back(row);
    }
    return out;
  };
  return Json{{"period", r.N},
              {"precision", r.precision},
              {"labels", labels},
              {"series", series},
              {"relations", relations},
              {"kernel", vectors(r.kernel_basis)},
              {"unexplained", vectors(r.unexplained)},
              {"explained_rank", r.explained_rank}};
}

}  // namespace itheta
