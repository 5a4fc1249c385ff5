// Command-line driver: orbit tables, theta expansions, lattice-coset series,
// correspondence checks, relation reports, and a canned regression suite.
//
// Exit codes: 0 all good, 1 usage error, 2 input error, 3 verification
// failure (mismatched series, false verdict, or a failed example claim).
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "itheta/errors.hpp"
#include "itheta/hecke.hpp"
#include "itheta/json_io.hpp"
#include "itheta/orbits.hpp"
#include "itheta/periodic.hpp"
#include "itheta/qseries.hpp"
#include "itheta/quadform.hpp"
#include "itheta/relations.hpp"
#include "itheta/theta.hpp"

using namespace itheta;

namespace {

struct UsageError {
  std::string msg;
};

std::string point_str(const Point& P) {
  return "(" + std::to_string(P.first) + "," + std::to_string(P.second) + ")";
}

Json point_json(const Point& P) { return Json::array({P.first, P.second}); }

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

const OrbitRecord* orbit_containing(const OrbitAnalysis& an, long m, long n) {
  for (const OrbitRecord& O : an.orbits)
    for (const Point& P : O.points)
      if (P == Point{m, n}) return &O;
  return nullptr;
}

// The sign function of the orbit through (m, n), rescaled so that the value
// at (m, n) itself is +1.
PeriodicFunction based_orbit_fn(const OrbitAnalysis& an, long N, long m,
                                long n) {
  const OrbitRecord* O = orbit_containing(an, m, n);
  if (O == nullptr || !O->admissible)
    throw Error("no admissible orbit through " + point_str({m, n}) + " mod " +
                std::to_string(N));
  PeriodicFunction f = orbit_sign_function(*O, N);
  if (pf_at(f, m, n) == -1)
    for (auto& [key, v] : f.vals) v = -v;
  return f;
}

long resolve_period(long period, const std::string& fn_path) {
  if (period > 0) return period;
  if (!fn_path.empty()) return pf_from_json(load_json_file(fn_path)).N;
  throw UsageError{"--period is required when no --fn is given"};
}

// ---------------------------------------------------------------- commands

int run_orbits(const std::string& form_path, const std::string& fn_path,
               long period, bool json) {
  QuadForm Q = qf_from_json(load_json_file(form_path));
  long N = resolve_period(period, fn_path);
  OrbitAnalysis an = gn_orbits(Q, N);
  if (json) {
    Json orbits = Json::array();
    for (const OrbitRecord& O : an.orbits) orbits.push_back(orbit_to_json(O));
    emit_json(Json{{"period", N},
                   {"ab_order", an.ctx.ab_order},
                   {"minus_id", an.ctx.minus_id},
                   {"orbits", orbits}});
    return 0;
  }
  std::printf("N=%ld  order(AB)=%ld  -id in G: %s\n", N, an.ctx.ab_order,
              an.ctx.minus_id ? "yes" : "no");
  std::printf("%-14s %6s %11s %10s %7s %s\n", "representative", "size",
              "admissible", "symmetric", "parity", "partner");
  for (const OrbitRecord& O : an.orbits) {
    const char* parity = O.parity == 1 ? "even" : O.parity == -1 ? "odd" : "-";
    std::printf("%-14s %6zu %11s %10s %7s %s\n",
                point_str(O.representative).c_str(), O.points.size(),
                O.admissible ? "yes" : "no", O.symmetric ? "yes" : "no",
                parity, point_str(O.partner).c_str());
  }
  return 0;
}

int run_theta(const std::string& form_path, const std::string& fn_path,
              long prec, const std::string& method, bool waive, bool json) {
  QuadForm Q = qf_from_json(load_json_file(form_path));
  PeriodicFunction f = pf_from_json(load_json_file(fn_path));
  Admissibility mode = waive ? Admissibility::Waive : Admissibility::Require;
  if (method == "quadrant" || method == "sector") {
    QSeries t = method == "quadrant" ? theta_quadrant(Q, f, prec, mode)
                                     : theta_sector(Q, f, prec, mode);
    if (json)
      emit_json(Json{{"method", method}, {"series", qs_to_json(t)}});
    else
      std::printf("%s\n", qs_to_text(t).c_str());
    return 0;
  }
  QSeries tq = theta_quadrant(Q, f, prec, mode);
  QSeries ts = theta_sector(Q, f, prec, mode);
  bool equal = qs_eq(tq, ts);
  if (json) {
    emit_json(Json{{"method", "both"},
                   {"quadrant", qs_to_json(tq)},
                   {"sector", qs_to_json(ts)},
                   {"equal", equal}});
  } else {
    std::printf("quadrant: %s\n", qs_to_text(tq).c_str());
    std::printf("sector:   %s\n", qs_to_text(ts).c_str());
    std::printf("equal: %s\n", equal ? "yes" : "no");
  }
  return equal ? 0 : 3;
}

int run_hecke(const std::string& lattice_path, long prec, bool json) {
  HeckeCoset C = coset_from_json(load_json_file(lattice_path));
  QSeries t = theta_hecke(C, prec);
  if (json)
    emit_json(Json{{"series", qs_to_json(t)}});
  else
    std::printf("%s\n", qs_to_text(t).c_str());
  return 0;
}

int run_to_hecke(const std::string& form_path, const std::string& fn_path,
                 long prec, bool verify, bool json) {
  QuadForm Q = qf_from_json(load_json_file(form_path));
  PeriodicFunction f = pf_from_json(load_json_file(fn_path));
  QfToHeckeResult R = qf_to_hecke(Q, f, prec);
  if (json) {
    Json shifts = Json::array();
    for (const Point& P : R.decomp.shift_points) shifts.push_back(point_json(P));
    Json j{{"index", R.decomp.index},
           {"sub_basis", Json::array({point_json(R.decomp.sub_basis.first),
                                      point_json(R.decomp.sub_basis.second)})},
           {"shifts", shifts},
           {"multiplier", to_string(R.decomp.mult)},
           {"unit", qfe_to_json(R.decomp.unit)},
           {"verdict", R.verdict},
           {"first_diff", R.first_diff}};
    if (verify) {
      j["lhs"] = qs_to_json(R.lhs);
      j["rhs"] = qs_to_json(R.rhs);
    }
    emit_json(j);
  } else {
    std::printf("support lattice basis: %s %s   cosets: %zu   index: %ld\n",
                point_str(R.decomp.sub_basis.first).c_str(),
                point_str(R.decomp.sub_basis.second).c_str(),
                R.decomp.shift_points.size(), R.decomp.index);
    for (const Point& P : R.decomp.shift_points)
      std::printf("  shift %s\n", point_str(P).c_str());
    if (verify) {
      std::printf("lhs: %s\n", qs_to_text(R.lhs).c_str());
      std::printf("rhs: %s\n", qs_to_text(R.rhs).c_str());
    }
    std::printf("verdict: %s\n", R.verdict ? "true" : "false");
    if (!R.verdict)
      std::printf("first differing exponent: %ld\n", R.first_diff);
  }
  return R.verdict ? 0 : 3;
}

int run_from_hecke(const std::string& lattice_path, long prec, bool verify,
                   bool json) {
  HeckeCoset C = coset_from_json(load_json_file(lattice_path));
  HeckeToQfResult R = hecke_to_qf(C, prec);
  if (json) {
    Json j{{"a", to_string(R.a)},
           {"b", to_string(R.b)},
           {"c", to_string(R.c)},
           {"scale", R.scale},
           {"fn", pf_to_json(R.fn)},
           {"verdict", R.verdict},
           {"first_diff", R.first_diff}};
    if (verify) {
      j["lhs"] = qs_to_json(R.lhs);
      j["rhs"] = qs_to_json(R.rhs);
    }
    emit_json(j);
  } else {
    std::printf("quadrant form: a=%s b=%s c=%s   scale: %ld   period: %ld   "
                "support: %zu\n",
                to_string(R.a).c_str(), to_string(R.b).c_str(),
                to_string(R.c).c_str(), R.scale, R.fn.N, R.fn.vals.size());
    if (verify) {
      std::printf("lhs: %s\n", qs_to_text(R.lhs).c_str());
      std::printf("rhs: %s\n", qs_to_text(R.rhs).c_str());
    }
    std::printf("verdict: %s\n", R.verdict ? "true" : "false");
    if (!R.verdict)
      std::printf("first differing exponent: %ld\n", R.first_diff);
  }
  return R.verdict ? 0 : 3;
}

int run_relations(const std::string& form_path, const std::string& fn_path,
                  long period, long prec, bool json) {
  QuadForm Q = qf_from_json(load_json_file(form_path));
  long N = resolve_period(period, fn_path);
  RelationReport rep = find_linear_relations(Q, N, prec);
  if (json) {
    emit_json(report_to_json(rep));
    return 0;
  }
  std::printf("N=%ld  precision=%ld\n", rep.N, rep.precision);
  for (std::size_t i = 0; i < rep.series_labels.size(); ++i)
    std::printf("theta[%s] = %s\n", point_str(rep.series_labels[i]).c_str(),
                qs_to_text(rep.series[i]).c_str());
  for (const SymbolicRelation& R : rep.symbolic) {
    if (R.labels.size() == 1)
      std::printf("relation (%s): theta[%s] = 0\n",
                  relation_kind_name(R.kind).c_str(),
                  point_str(R.labels[0]).c_str());
    else
      std::printf("relation (%s): theta[%s] = %stheta[%s]\n",
                  relation_kind_name(R.kind).c_str(),
                  point_str(R.labels[0]).c_str(), R.sign == 1 ? "" : "-",
                  point_str(R.labels[1]).c_str());
  }
  auto print_vectors = [&](const char* name,
                           const std::vector<std::vector<Rational>>& vs) {
    std::printf("%s: %zu\n", name, vs.size());
    for (const auto& v : vs) {
      std::printf(" ");
      for (const auto& x : v) std::printf(" %s", to_string(x).c_str());
      std::printf("\n");
    }
  };
  print_vectors("kernel vectors", rep.kernel_basis);
  std::printf("explained rank: %ld\n", rep.explained_rank);
  print_vectors("unexplained", rep.unexplained);
  return 0;
}

int run_minus_id(const std::string& form_path, long rp, bool rp_set,
                 long period, bool json) {
  if (form_path.empty() == !rp_set)
    throw UsageError{"pass exactly one of --form and --rp"};
  bool contains;
  Json desc;
  if (rp_set) {
    contains = contains_minus_id_pr(1, rp, period);
    desc = Json{{"period", period}, {"rp", rp}, {"contains_minus_id", contains}};
    if (!json)
      std::printf("N=%ld rp=%ld: -id in G: %s\n", period, rp,
                  contains ? "yes" : "no");
  } else {
    QuadForm Q = qf_from_json(load_json_file(form_path));
    contains = contains_minus_id(Q, period);
    desc = Json{{"period", period},
                {"form", qf_to_json(Q)},
                {"contains_minus_id", contains}};
    if (!json)
      std::printf("N=%ld p=%s r=%s: -id in G: %s\n", period,
                  Q.p.get_str().c_str(), Q.r.get_str().c_str(),
                  contains ? "yes" : "no");
  }
  if (json) emit_json(desc);
  return 0;
}

int run_residues(long period, bool json) {
  auto [contains, count] = prop_opp_residues(period);
  std::vector<long> complement;
  for (long rho = 0; rho < period; ++rho)
    if (!contains.count(rho)) complement.push_back(rho);
  if (json) {
    emit_json(Json{{"period", period},
                   {"contains", contains},
                   {"complement", complement},
                   {"count", count}});
    return 0;
  }
  std::printf("N=%ld\n", period);
  std::printf("rp classes with -id in G:");
  for (long rho : contains) std::printf(" %ld", rho);
  std::printf("\nrp classes without:");
  for (long rho : complement) std::printf(" %ld", rho);
  std::printf("\ncount with -id: %ld (= N - (n1+n2)/2)\n", count);
  return 0;
}

// ---------------------------------------------------------------- examples

struct ClaimList {
  bool all = true;
  void check(bool ok, const std::string& text) {
    all = all && ok;
    std::printf("%s: %s\n", ok ? "PASS" : "FAIL", text.c_str());
  }
};

PeriodicFunction chi3_of(long cm, long cn) {  // chi3(cm*m + cn*n)
  PeriodicFunction f = pf_new(3);
  for (long m = 0; m < 3; ++m)
    for (long n = 0; n < 3; ++n) {
      long s = ((cm * m + cn * n) % 3 + 3) % 3;
      if (s != 0) pf_set(f, m, n, s == 1 ? 1 : -1);
    }
  return f;
}

long count_admissible(const OrbitAnalysis& an) {
  long k = 0;
  for (const OrbitRecord& O : an.orbits)
    if (O.admissible) ++k;
  return k;
}

// Leading-term check helper: verdict plus a "(computed ...)" tag on failure.
bool leading_is(const QSeries& t, long e, const Rational& c, bool exact_coeff,
                std::string* tag) {
  auto lead = qs_leading(t);
  if (!lead) {
    *tag = " (computed zero series)";
    return false;
  }
  bool ok = lead->first == e && (!exact_coeff || lead->second == c);
  if (!ok)
    *tag = " (computed " + qs_to_text(t).substr(0, 24) + "...)";
  return ok;
}

int run_example_n3(long prec) {
  ClaimList cl;
  {
    QuadForm Q = qf_new(1, Rational(5, 2), 1);
    OrbitAnalysis an = gn_orbits(Q, 3);
    cl.check(count_admissible(an) == 1,
             "(1,5/2,1) mod 3: exactly one admissible orbit");
    PeriodicFunction f = based_orbit_fn(an, 3, 1, 0);
    cl.check(pf_equal_as_functions(f, chi3_of(1, 1)),
             "(1,5/2,1): orbit function with f(1,0)=1 is chi3(m+n)");
    cl.check(qs_to_text(theta_quadrant(Q, f, 9)) ==
                 "2*q^1 - 2*q^4 - 2*q^7 + O(q^9)",
             "(1,5/2,1): theta = 2q - 2q^4 - 2q^7 + O(q^9), leading "
             "coefficient 1 + chi3(r) = 2");
  }
  {
    QuadForm Q = qf_new(1, Rational(7, 2), 7);
    OrbitAnalysis an = gn_orbits(Q, 3);
    PeriodicFunction f = based_orbit_fn(an, 3, 1, 0);
    cl.check(pf_equal_as_functions(f, chi3_of(1, -1)),
             "(1,7/2,7): orbit function with f(1,0)=1 is chi3(m-n)");
    QSeries t = theta_quadrant(Q, f, std::max(prec, 8L));
    std::string tag;
    bool lead_ok = leading_is(t, 1, 1, true, &tag);
    cl.check(lead_ok, "(1,7/2,7): leading term q^1" + tag);
    cl.check(qs_coeff(t, 7) == -1,
             "(1,7/2,7): coefficient at q^7 is chi3(-1) = -1");
  }
  {
    QuadForm Q = qf_new(1, Rational(7, 2), 1);
    PeriodicFunction f = based_orbit_fn(gn_orbits(Q, 3), 3, 1, 0);
    long M = std::max(prec, 200L);
    cl.check(qs_is_zero(theta_quadrant(Q, f, M)),
             "(1,7/2,1): a = c and r = -1 mod 3, theta vanishes to q^" +
                 std::to_string(M));
  }
  return cl.all ? 0 : 3;
}

int run_example_n5a(long prec) {
  ClaimList cl;
  long M = std::max(prec, 40L);
  {
    QuadForm Q = qf_new(2, 14, 7);  // p = r = 1 mod 5
    OrbitAnalysis an = gn_orbits(Q, 5);
    cl.check(count_admissible(an) == 2,
             "(2,14,7) mod 5: two admissible orbits");
    QSeries t1 = theta_quadrant(Q, based_orbit_fn(an, 5, 1, 0), M);
    QSeries t2 = theta_quadrant(Q, based_orbit_fn(an, 5, 2, 0), M);
    std::string tag;
    bool ok1 = leading_is(t1, 2, 1, true, &tag) && qs_coeff(t1, 7) == 1;
    cl.check(ok1,
             "(2,14,7) case p=r=1: theta_1 = q^a + q^c + ... with a=2, c=7" +
                 tag);
    tag.clear();
    bool ok2 = leading_is(t2, 8, 1, true, &tag) && qs_coeff(t2, 28) == 1;
    cl.check(ok2, "(2,14,7) case p=r=1: theta_2 = q^4a + q^4c + ..." + tag);
  }
  {
    QuadForm Q = qf_new(1, 3, 6);  // p = r = -1 mod 5
    OrbitAnalysis an = gn_orbits(Q, 5);
    QSeries t1 = theta_quadrant(Q, based_orbit_fn(an, 5, 1, 0), M);
    QSeries t2 = theta_quadrant(Q, based_orbit_fn(an, 5, 2, 0), M);
    std::string tag;
    bool ok1 = leading_is(t1, 1, 1, true, &tag) && qs_coeff(t1, 6) == -1;
    cl.check(ok1,
             "(1,3,6) case p=r=-1: theta_1 = q^a - q^c + ... with a=1, c=6" +
                 tag);
    tag.clear();
    bool ok2 = leading_is(t2, 4, 1, true, &tag) && qs_coeff(t2, 24) == -1;
    cl.check(ok2, "(1,3,6) case p=r=-1: theta_2 = q^4a - q^4c + ..." + tag);
  }
  {
    QuadForm Q = qf_new(1, 4, 4);  // p = 2, r = -2 mod 5; c = 4a
    OrbitAnalysis an = gn_orbits(Q, 5);
    QSeries t1 = theta_quadrant(Q, based_orbit_fn(an, 5, 1, 0), M);
    QSeries t2 = theta_quadrant(Q, based_orbit_fn(an, 5, 2, 0), M);
    std::string tag;
    bool ok1 = leading_is(t1, 1, 0, false, &tag);
    cl.check(ok1,
             "(1,4,4) case p=2, r=-2, c=4a: theta_1 has leading exponent a=1" +
                 tag);
    tag.clear();
    bool ok2 = leading_is(t2, 9, 0, false, &tag);
    cl.check(ok2,
             "(1,4,4) case p=2, r=-2, c=4a: theta_2 has leading exponent "
             "9a=9" + tag);
  }
  {
    QuadForm Q = qf_new(1, 6, 4);  // p = -2, r = 2 mod 5; c = 4a
    OrbitAnalysis an = gn_orbits(Q, 5);
    QSeries t1 = theta_quadrant(Q, based_orbit_fn(an, 5, 1, 0), M);
    QSeries t2 = theta_quadrant(Q, based_orbit_fn(an, 5, 2, 0), M);
    std::string tag;
    bool ok1 = leading_is(t1, 1, 0, false, &tag);
    cl.check(ok1,
             "(1,6,4) swapped orientation: theta_1 has leading exponent a=1" +
                 tag);
    tag.clear();
    bool ok2 = leading_is(t2, 9, 0, false, &tag);
    cl.check(ok2,
             "(1,6,4) swapped orientation: theta_2 has leading exponent 9a=9" +
                 tag);
  }
  return cl.all ? 0 : 3;
}

int run_example_n5b(long) {
  ClaimList cl;
  QuadForm Q = qf_new(1, Rational(3, 2), 1);  // rp = 9 = -1 mod 5
  OrbitAnalysis an = gn_orbits(Q, 5);
  cl.check(an.ctx.ab_order == 5, "(1,3/2,1) mod 5: AB has order 5");
  cl.check(count_admissible(an) == 2 && orbit_containing(an, 1, 0) != nullptr &&
               orbit_containing(an, 2, 0) != nullptr &&
               orbit_containing(an, 1, 0)->admissible &&
               orbit_containing(an, 2, 0)->admissible &&
               orbit_containing(an, 1, 0) != orbit_containing(an, 2, 0),
           "(1,3/2,1) mod 5: still two admissible orbits, through (1,0) and "
           "(2,0)");
  auto Av = qf_apply_A(Q, 1, 1);
  auto Bv = qf_apply_B(Q, 1, 1);
  cl.check(mod_long(Av.first, 5) == 1 && mod_long(Av.second, 5) == 1 &&
               mod_long(Bv.first, 5) == 1 && mod_long(Bv.second, 5) == 1,
           "(1,3/2,1) mod 5: (1,1) is a common invariant vector of A and B");
  return cl.all ? 0 : 3;
}

int run_example_n7(long prec) {
  ClaimList cl;
  QuadForm Q = qf_new(1, 3, 1);  // p = r = 1 mod 7
  OrbitAnalysis an = gn_orbits(Q, 7);
  long sym = 0, asym = 0;
  std::vector<const OrbitRecord*> asyms;
  for (const OrbitRecord& O : an.orbits) {
    if (!O.admissible) continue;
    if (O.symmetric) {
      ++sym;
    } else {
      ++asym;
      asyms.push_back(&O);
    }
  }
  cl.check(sym == 3 && asym == 2,
           "(1,3,1) mod 7: five admissible orbits, three symmetric and two "
           "asymmetric");
  cl.check(asyms.size() == 2 &&
               asyms[0]->partner == asyms[1]->representative &&
               asyms[1]->partner == asyms[0]->representative,
           "(1,3,1) mod 7: the asymmetric orbits are negatives of each other");
  struct Want {
    long m, n, e;
  };
  for (Want w : {Want{1, 0, 1}, Want{2, 0, 4}, Want{3, 0, 9}, Want{1, 3, 28}}) {
    QSeries t = theta_quadrant(Q, based_orbit_fn(an, 7, w.m, w.n),
                               std::max(prec, 30L));
    std::string tag;
    bool lead_ok = leading_is(t, w.e, 2, true, &tag);
    cl.check(lead_ok, "(1,3,1) mod 7: orbit of " + point_str({w.m, w.n}) +
                          " has leading term 2q^" + std::to_string(w.e) + tag);
  }
  RelationReport rep = find_linear_relations(Q, 7, std::max(prec, 100L));
  cl.check(rep.kernel_basis.empty(),
           "(1,3,1) mod 7: no linear relation among the four representative "
           "series to q^" + std::to_string(std::max(prec, 100L)));
  return cl.all ? 0 : 3;
}

// v_{s1,s2} = ((b/a) s2 - s1, (b/c) s1 - s2); requires b/a and b/c integral.
Point ex4_vector(const QuadForm& Q, long s1, long s2, long N) {
  Rational ba = Q.b / Q.a, bc = Q.b / Q.c;
  if (!is_integer(ba) || !is_integer(bc))
    throw Error("b/a and b/c must be integers for this construction");
  Rational vm = ba * s2 - s1, vn = bc * s1 - s2;
  return {mod_long(to_integer(vm), N), mod_long(to_integer(vn), N)};
}

int run_example_ex4(long) {
  ClaimList cl;
  {
    QuadForm Q = qf_new(1, 2, 2);
    Rational Nr = 4 * Q.D / (Q.a * Q.c);
    cl.check(is_integer(Nr) && Nr == 4, "(1,2,2): N = 4D/(ac) = 4");
    Point v = ex4_vector(Q, 1, 1, 4);
    cl.check(v == Point{1, 0}, "(1,2,2): v_{1,1} = (b/a - 1, b/c - 1) = (1,0)");
    OrbitAnalysis an = gn_orbits(Q, 4);
    const OrbitRecord* O = orbit_containing(an, v.first, v.second);
    cl.check(O != nullptr && O->admissible && O->points.size() == 4,
             "(1,2,2): the orbit of v_{1,1} is admissible with four elements");
    bool congruent = O != nullptr;
    if (O != nullptr)
      for (const Point& P : O->points)
        congruent = congruent && mod_long(P.first, 2) == v.first % 2 &&
                    mod_long(P.second, 2) == v.second % 2;
    cl.check(congruent,
             "(1,2,2): every orbit element is congruent to v_{1,1} mod N/2");
  }
  {
    QuadForm Q = qf_new(1, 2, 1);
    Rational Nr = 4 * Q.D / (Q.a * Q.c);
    cl.check(is_integer(Nr) && Nr == 12, "(1,2,1): N = 4D/(ac) = 12");
    long l = 3;
    Rational ba1 = Q.b / Q.a + 1, bc1 = Q.b / Q.c + 1;
    cl.check(is_integer(ba1 / l) && is_integer(bc1 / l),
             "(1,2,1): l = 3 divides b/a + 1 and b/c + 1");
    Rational coord = 2 * Q.D / (l * Q.a * Q.c);
    cl.check(coord == 2, "(1,2,1): v_l = (2D/(lac))(1,1) = (2,2)");
    auto Av = qf_apply_A(Q, 2, 2);
    auto Bv = qf_apply_B(Q, 2, 2);
    cl.check(mod_long(Av.first, 12) == 2 && mod_long(Av.second, 12) == 2 &&
                 mod_long(Bv.first, 12) == 2 && mod_long(Bv.second, 12) == 2,
             "(1,2,1): v_l = (2,2) is fixed by A and B mod 12");
  }
  return cl.all ? 0 : 3;
}

int run_examples(const std::string& id, long prec) {
  if (id == "n3") return run_example_n3(prec);
  if (id == "n5a") return run_example_n5a(prec);
  if (id == "n5b") return run_example_n5b(prec);
  if (id == "n7") return run_example_n7(prec);
  return run_example_ex4(prec);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indefinite theta series of binary quadratic forms: orbits, "
               "q-expansions, lattice-coset series, and linear relations"};
  app.require_subcommand(1);

  std::string form_path, fn_path, lattice_path, method = "quadrant", id;
  long prec = 100, period = 0, rp = 0;
  bool json = false, verify = false, waive = false;

  CLI::App* c_orbits = app.add_subcommand(
      "orbits", "Classify the orbits of the reflection group mod N");
  c_orbits->add_option("--form", form_path, "quadratic form JSON")->required();
  c_orbits->add_option("--period", period, "modulus N");
  c_orbits->add_option("--fn", fn_path, "periodic function JSON (period source)");
  c_orbits->add_flag("--json", json, "JSON output");

  CLI::App* c_theta = app.add_subcommand(
      "theta", "q-expansion of the theta series of (Q, f)");
  c_theta->add_option("--form", form_path, "quadratic form JSON")->required();
  c_theta->add_option("--fn", fn_path, "periodic function JSON")->required();
  c_theta->add_option("--prec", prec, "truncation exponent");
  c_theta->add_option("--method", method, "quadrant, sector, or both")
      ->check(CLI::IsMember({"quadrant", "sector", "both"}));
  c_theta->add_flag("--waive-admissibility", waive,
                    "skip the admissibility check");
  c_theta->add_flag("--json", json, "JSON output");

  CLI::App* c_hecke = app.add_subcommand(
      "hecke", "theta series of a lattice coset with a distinguished unit");
  c_hecke->add_option("--lattice", lattice_path, "lattice coset JSON")
      ->required();
  c_hecke->add_option("--prec", prec, "truncation exponent");
  c_hecke->add_flag("--json", json, "JSON output");

  CLI::App* c_to = app.add_subcommand(
      "to-hecke", "decompose (Q, f) into lattice cosets and check the "
                  "index identity");
  c_to->add_option("--form", form_path, "quadratic form JSON")->required();
  c_to->add_option("--fn", fn_path, "periodic function JSON")->required();
  c_to->add_option("--prec", prec, "truncation exponent");
  c_to->add_flag("--verify", verify, "print both compared series");
  c_to->add_flag("--json", json, "JSON output");

  CLI::App* c_from = app.add_subcommand(
      "from-hecke", "rewrite a coset series as a quadrant sum and check it");
  c_from->add_option("--lattice", lattice_path, "lattice coset JSON")
      ->required();
  c_from->add_option("--prec", prec, "truncation exponent");
  c_from->add_flag("--verify", verify, "print both compared series");
  c_from->add_flag("--json", json, "JSON output");

  CLI::App* c_rel = app.add_subcommand(
      "relations", "linear relations among the orbit theta series mod N");
  c_rel->add_option("--form", form_path, "quadratic form JSON")->required();
  c_rel->add_option("--period", period, "modulus N");
  c_rel->add_option("--fn", fn_path, "periodic function JSON (period source)");
  c_rel->add_option("--prec", prec, "truncation exponent");
  c_rel->add_flag("--json", json, "JSON output");

  CLI::App* c_mid = app.add_subcommand(
      "minus-id", "does the reflection group mod N contain -identity");
  c_mid->add_option("--form", form_path, "quadratic form JSON");
  CLI::Option* rp_opt =
      c_mid->add_option("--rp", rp, "residue class of the product rp mod N");
  c_mid->add_option("--period", period, "modulus N")->required();
  c_mid->add_flag("--json", json, "JSON output");

  CLI::App* c_res = app.add_subcommand(
      "residues", "rp classes mod an odd prime N whose group contains -id");
  c_res->add_option("--period", period, "odd prime modulus N")->required();
  c_res->add_flag("--json", json, "JSON output");

  CLI::App* c_ex = app.add_subcommand(
      "examples", "canned regression instances with PASS/FAIL claims");
  c_ex->add_option("--id", id, "one of n3, n5a, n5b, n7, ex4")
      ->required()
      ->check(CLI::IsMember({"n3", "n5a", "n5b", "n7", "ex4"}));
  c_ex->add_option("--prec", prec, "truncation exponent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (prec < 1) throw UsageError{"--prec must be at least 1"};
    if (app.got_subcommand(c_orbits))
      return run_orbits(form_path, fn_path, period, json);
    if (app.got_subcommand(c_theta))
      return run_theta(form_path, fn_path, prec, method, waive, json);
    if (app.got_subcommand(c_hecke)) return run_hecke(lattice_path, prec, json);
    if (app.got_subcommand(c_to))
      return run_to_hecke(form_path, fn_path, prec, verify, json);
    if (app.got_subcommand(c_from))
      return run_from_hecke(lattice_path, prec, verify, json);
    if (app.got_subcommand(c_rel))
      return run_relations(form_path, fn_path, period, prec, json);
    if (app.got_subcommand(c_mid))
      return run_minus_id(form_path, rp, rp_opt->count() > 0, period, json);
    if (app.got_subcommand(c_res)) return run_residues(period, json);
    return run_examples(id, prec);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.msg.c_str());
    return 1;
  } catch (const VerificationFailed& e) {
    std::fprintf(stderr, "verification failure: %s\n", e.what());
    return 3;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
