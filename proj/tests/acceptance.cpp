// Acceptance gate: one PASS/FAIL line per criterion, exit 0 iff all pass.
// Criteria 3 and 5 carry known failures; the lines state the obstruction and
// the README carries the full analysis.
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "itheta/errors.hpp"
#include "itheta/hecke.hpp"
#include "itheta/orbits.hpp"
#include "itheta/periodic.hpp"
#include "itheta/qseries.hpp"
#include "itheta/quadform.hpp"
#include "itheta/relations.hpp"
#include "itheta/theta.hpp"

using namespace itheta;

namespace {

struct Gate {
  bool all = true;
  void line(const char* id, bool ok, const std::string& text) {
    all = all && ok;
    std::printf("%s %2s  %s\n", ok ? "PASS" : "FAIL", id, text.c_str());
  }
};

const OrbitRecord* orbit_containing(const OrbitAnalysis& an, long m, long n) {
  for (const OrbitRecord& O : an.orbits)
    for (const Point& P : O.points)
      if (P == Point{m, n}) return &O;
  return nullptr;
}

PeriodicFunction based_orbit_fn(const OrbitAnalysis& an, long N, long m,
                                long n) {
  PeriodicFunction f = orbit_sign_function(*orbit_containing(an, m, n), N);
  if (pf_at(f, m, n) == -1)
    for (auto& [key, v] : f.vals) v = -v;
  return f;
}

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

// Random form with integral reflections: p = -pp, r = -rr, b = pp*rr*w/2.
QuadForm random_form(std::mt19937& rng) {
  std::uniform_int_distribution<long> pick(1, 12), wpick(1, 2);
  for (;;) {
    long pp = pick(rng), rr = pick(rng), w = wpick(rng);
    if (pp * rr <= 4) continue;  // D = pr w^2 (pr/4 - 1) must be positive
    return qf_new(Rational(rr) * w, make_rational(pp * rr * w, 2),
                  Rational(pp) * w);
  }
}

bool criterion1(std::string* text) {
  std::mt19937 rng(20260819u);
  std::uniform_int_distribution<long> npick(3, 16);
  long checked = 0;
  while (checked < 50) {
    QuadForm Q = random_form(rng);
    long N = npick(rng);
    OrbitAnalysis an = gn_orbits(Q, N);
    for (const OrbitRecord& O : an.orbits) {
      if (!O.admissible) continue;
      PeriodicFunction f = orbit_sign_function(O, N);
      long diff = -1;
      if (!verify_main_identity(Q, f, 60, Admissibility::Require, &diff)) {
        *text = "quadrant and sector sums differ at q^" + std::to_string(diff);
        return false;
      }
      ++checked;
    }
  }
  *text = "quadrant sum = sector sum for " + std::to_string(checked) +
          " randomized orbit functions (p,r in [-12,-1], N in 3..16, M=60)";
  return true;
}

// The criterion-2 instances: (1,5/2,1) with chi3(m+n) and every admissible
// orbit function of (1,3,1) mod 7.
std::vector<std::pair<QuadForm, PeriodicFunction>> correspondence_fixtures() {
  std::vector<std::pair<QuadForm, PeriodicFunction>> out;
  out.emplace_back(qf_new(1, Rational(5, 2), 1), chi3_of(1, 1));
  QuadForm Q = qf_new(1, 3, 1);
  OrbitAnalysis an = gn_orbits(Q, 7);
  for (const OrbitRecord& O : an.orbits)
    if (O.admissible) out.emplace_back(Q, orbit_sign_function(O, 7));
  return out;
}

bool criterion2(std::string* text) {
  long n = 0;
  for (const auto& [Q, f] : correspondence_fixtures()) {
    QfToHeckeResult r = qf_to_hecke(Q, f, 60);
    if (!r.verdict) {
      *text = "index identity fails at q^" + std::to_string(r.first_diff);
      return false;
    }
    ++n;
  }
  *text = "index * theta(Q,f) = sum of coset series for all " +
          std::to_string(n) + " fixtures at M=60";
  return true;
}

bool criterion3(std::string* text) {
  long roundtrips = 0;
  for (const auto& [Q, f] : correspondence_fixtures()) {
    QfToHeckeResult r = qf_to_hecke(Q, f, 60);
    for (const HeckeCoset& C : decomposition_cosets(r.decomp)) {
      HeckeToQfResult rt = hecke_to_qf(C, 60);
      if (!rt.verdict) {
        *text = "roundtrip differs at q^" + std::to_string(rt.first_diff);
        return false;
      }
      ++roundtrips;
    }
  }
  // Split case, D a square: a nontrivial totally positive norm-one unit has
  // rational components u and 1/u, and preserving any rank-2 lattice would
  // make multiplication by it an integral matrix with trace u + 1/u.  For
  // positive rational u that trace is integral only at u = 1, so no valid
  // coset exists and the sub-item cannot run.
  bool rejected = false;
  std::string err;
  try {
    Rational D = Rational(225, 64);
    QuadLattice L = lattice_make(qfe_one(D), qfe_make(0, 1, D));
    HeckeCoset C{L, qfe_zero(D), 1, qfe_make(Rational(17, 8), 1, D)};
    hecke_to_qf(C, 60);
  } catch (const Error& e) {
    rejected = true;
    err = e.what();
  }
  *text = std::to_string(roundtrips) +
          " dense roundtrips reproduce the coset series at M=60, but the "
          "split case is impossible: the unit u = 4 has Tr = u + 1/u = 17/4 "
          "not integral, no rank-2 lattice is preserved (engine: " +
          (rejected ? err : "accepted, which contradicts the obstruction") +
          ")";
  return false;
}

bool criterion4(std::string* text) {
  QuadForm Q = qf_new(1, Rational(5, 2), 1);
  OrbitAnalysis an = gn_orbits(Q, 3);
  if (count_admissible(an) != 1) {
    *text = "(1,5/2,1) mod 3: admissible orbit count != 1";
    return false;
  }
  PeriodicFunction f = based_orbit_fn(an, 3, 1, 0);
  if (!pf_equal_as_functions(f, chi3_of(1, 1))) {
    *text = "(1,5/2,1): orbit function is not chi3(m+n) up to sign";
    return false;
  }
  if (qs_to_text(theta_quadrant(Q, f, 9)) !=
      "2*q^1 - 2*q^4 - 2*q^7 + O(q^9)") {
    *text = "(1,5/2,1): series differs from 2q - 2q^4 - 2q^7 + O(q^9)";
    return false;
  }
  QuadForm Q7 = qf_new(1, Rational(7, 2), 7);
  QSeries t = theta_quadrant(Q7, based_orbit_fn(gn_orbits(Q7, 3), 3, 1, 0), 8);
  auto lead = qs_leading(t);
  if (!lead || lead->first != 1 || lead->second != 1 || qs_coeff(t, 7) != -1) {
    *text = "(1,7/2,7): expected leading q^1 and coefficient -1 at q^7, got " +
            qs_to_text(t);
    return false;
  }
  QuadForm Qz = qf_new(1, Rational(7, 2), 1);
  if (!qs_is_zero(theta_quadrant(Qz, based_orbit_fn(gn_orbits(Qz, 3), 3, 1, 0),
                                 200))) {
    *text = "(1,7/2,1): series does not vanish to q^200";
    return false;
  }
  *text = "(1,5/2,1) has the unique chi3(m+n) orbit with series "
          "2q - 2q^4 - 2q^7; (1,7/2,7) leads with q^1 and has -1 at q^7; "
          "(1,7/2,1) vanishes to q^200";
  return true;
}

bool criterion5(std::string* text) {
  QuadForm Qb = qf_new(1, Rational(3, 2), 1);
  OrbitAnalysis anb = gn_orbits(Qb, 5);
  if (anb.ctx.ab_order != 5 || count_admissible(anb) != 2) {
    *text = "(1,3/2,1) mod 5: expected order(AB)=5 with two admissible orbits";
    return false;
  }
  QuadForm Q = qf_new(1, 4, 4);
  OrbitAnalysis an = gn_orbits(Q, 5);
  auto l1 = qs_leading(theta_quadrant(Q, based_orbit_fn(an, 5, 1, 0), 30));
  auto l2 = qs_leading(theta_quadrant(Q, based_orbit_fn(an, 5, 2, 0), 30));
  long e1 = l1 ? l1->first : -1, e2 = l2 ? l2->first : -1;
  if (e1 == 1 && e2 == 9) {
    *text = "(1,3/2,1): order(AB)=5 with two orbits; (1,4,4): leading "
            "exponents 1 and 9";
    return true;
  }
  *text = "(1,3/2,1) passes, but (1,4,4) theta_2 leads at q^" +
          std::to_string(e2) + " instead of q^9: the q^4 contributions of "
          "(2,0) and (0,1) reinforce instead of cancelling in this "
          "orientation (the mirror orientation (1,6,4) does lead at q^1 and "
          "q^9)";
  return false;
}

bool criterion6(std::string* text) {
  QuadForm Q = qf_new(1, 3, 1);
  OrbitAnalysis an = gn_orbits(Q, 7);
  long sym = 0, asym = 0;
  for (const OrbitRecord& O : an.orbits)
    if (O.admissible) (O.symmetric ? sym : asym) += 1;
  if (sym != 3 || asym != 2) {
    *text = "(1,3,1) mod 7: expected 3 symmetric + 2 asymmetric admissible "
            "orbits";
    return false;
  }
  const long want[4][3] = {{1, 0, 1}, {2, 0, 4}, {3, 0, 9}, {1, 3, 28}};
  for (const auto& w : want) {
    auto lead =
        qs_leading(theta_quadrant(Q, based_orbit_fn(an, 7, w[0], w[1]), 30));
    if (!lead || lead->first != w[2]) {
      *text = "(1,3,1) mod 7: orbit of (" + std::to_string(w[0]) + "," +
              std::to_string(w[1]) + ") does not lead at q^" +
              std::to_string(w[2]);
      return false;
    }
  }
  if (!find_linear_relations(Q, 7, 100).kernel_basis.empty()) {
    *text = "(1,3,1) mod 7: unexpected linear relation at M=100";
    return false;
  }
  *text = "(1,3,1) mod 7 has 3+2 admissible orbits, leading exponents "
          "1/4/9/28, and a trivial relation kernel at M=100";
  return true;
}

bool criterion7(std::string* text) {
  const std::vector<std::pair<long, std::set<long>>> table = {
      {3, {1}}, {5, {1, 4}}, {7, {1, 4}}, {11, {1, 4, 5, 9}},
      {13, {1, 4, 9, 10, 12}}};
  for (const auto& [N, want] : table) {
    auto [contains, count] = prop_opp_residues(N);
    std::set<long> complement;
    for (long rho = 0; rho < N; ++rho)
      if (!contains.count(rho)) complement.insert(rho);
    if (complement != want) {
      *text = "residue complement differs for N=" + std::to_string(N);
      return false;
    }
  }
  long primes = 0;
  for (long N = 3; N <= 97; N += 2) {
    bool prime = true;
    for (long d = 3; d * d <= N; d += 2)
      if (N % d == 0) prime = false;
    if (!prime) continue;
    prop_opp_residues(N);  // throws if the count identity fails
    ++primes;
  }
  *text = "residue complements match for N=3,5,7,11,13 and the count "
          "identity N - (n1+n2)/2 holds for all " + std::to_string(primes) +
          " odd primes up to 97";
  return true;
}

bool criterion8(std::string* text) {
  std::mt19937 rng(87u);
  long checked = 0;
  for (long N : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    for (int i = 0; i < 6; ++i) {
      QuadForm Q = random_form(rng);
      if (!prop_symodd_check(Q, N)) {
        *text = "a symmetric admissible orbit is even mod " +
                std::to_string(N) + " although -id is missing";
        return false;
      }
      ++checked;
    }
  }
  *text = "without -id every symmetric admissible orbit is odd: " +
          std::to_string(checked) + " randomized (p,r) sweeps over primes "
          "N <= 31";
  return true;
}

bool criterion9(std::string* text) {
  struct Fixture {
    Rational a, b, c;
    long N;
  };
  const std::vector<Fixture> fixtures = {
      {1, Rational(5, 2), 1, 3}, {1, Rational(7, 2), 1, 3},
      {1, Rational(7, 2), 7, 3}, {1, Rational(3, 2), 1, 5},
      {1, 4, 4, 5},              {1, 6, 4, 5},
      {1, 3, 1, 7},              {1, 6, 4, 8},
      {1, 9, 9, 9}};
  std::set<RelationKind> kinds;
  for (const Fixture& fx : fixtures) {
    // find_linear_relations asserts every emitted relation on the computed
    // series and throws VerificationFailed on any mismatch.
    RelationReport rep =
        find_linear_relations(qf_new(fx.a, fx.b, fx.c), fx.N, 100);
    for (const SymbolicRelation& R : rep.symbolic) kinds.insert(R.kind);
  }
  for (RelationKind k : {RelationKind::Negation, RelationKind::EvenSymmetricZero,
                         RelationKind::Tau, RelationKind::TauT}) {
    if (!kinds.count(k)) {
      *text = "relation kind " + relation_kind_name(k) +
              " never fired on the fixture set";
      return false;
    }
  }
  // Coset vanishing instances: a totally negative norm-one unit preserving
  // the coset forces the series to vanish.
  QuadForm Qn3 = qf_new(1, Rational(5, 2), 1);
  QuadLattice Ln3 = lattice_make(qf_embed(Qn3, 1, 0), qf_embed(Qn3, 0, 1));
  QuadFieldElem epsn3 = qf_epsilon(Qn3);
  Rational D8 = 8;
  QuadLattice L8 = lattice_make(qfe_one(D8), qfe_make(0, 1, D8));
  QuadLattice L8s = lattice_make(qfe_make(3, Rational(1, 2), D8),
                                 qfe_make(4, 3, D8));
  QuadFieldElem eps8 = qfe_make(17, 6, D8);
  QuadFieldElem eta8 = qfe_neg(qfe_make(3, 1, D8));
  struct Instance {
    HeckeCoset C;
    QuadFieldElem delta;
  };
  const std::vector<Instance> instances = {
      {{Ln3, qfe_zero(Qn3.D), 1, epsn3}, qfe_neg(qfe_one(Qn3.D))},
      {{Ln3, qfe_make(Rational(1, 2), Rational(1, 7), Qn3.D), 7, epsn3},
       qfe_neg(qfe_make(Rational(5, 2), 1, Qn3.D))},
      {{L8, qfe_make(Rational(-1, 2), Rational(1, 8), D8), 8, eps8}, eta8},
      {{L8s, qfe_make(-1, Rational(1, 8), D8), Rational(8, 7), eps8}, eta8}};
  for (const Instance& inst : instances) {
    UnitVanishingVerdict v = unit_vanishing(inst.C, inst.delta, 200);
    if (!v.verdict) {
      *text = "a coset with a totally negative preserving unit has a "
              "nonvanishing series";
      return false;
    }
  }
  *text = "negation/even-symmetric/tau/tau_t all fire and hold exactly on " +
          std::to_string(fixtures.size()) + " fixtures at M=100; 4 coset "
          "vanishing instances are zero to M=200";
  return true;
}

bool criterion10(std::string* text) {
  QuadForm Q = qf_new(1, 2, 2);
  if (4 * Q.D / (Q.a * Q.c) != 4) {
    *text = "(1,2,2): N = 4D/(ac) != 4";
    return false;
  }
  OrbitAnalysis an = gn_orbits(Q, 4);
  const OrbitRecord* O = orbit_containing(an, 1, 0);  // (b/a - 1, b/c - 1)
  if (O == nullptr || !O->admissible || O->points.size() != 4) {
    *text = "(1,2,2): the orbit of (1,0) is not admissible of size 4";
    return false;
  }
  for (const Point& P : O->points)
    if (mod_long(P.first, 2) != 1 || mod_long(P.second, 2) != 0) {
      *text = "(1,2,2): an orbit element is not congruent to (1,0) mod 2";
      return false;
    }
  QuadForm Q2 = qf_new(1, 2, 1);  // (2D/(3ac))(1,1) = (2,2), N = 12
  auto Av = qf_apply_A(Q2, 2, 2);
  auto Bv = qf_apply_B(Q2, 2, 2);
  if (mod_long(Av.first, 12) != 2 || mod_long(Av.second, 12) != 2 ||
      mod_long(Bv.first, 12) != 2 || mod_long(Bv.second, 12) != 2) {
    *text = "(1,2,1): (2,2) is not fixed by both reflections mod 12";
    return false;
  }
  *text = "(1,2,2): the orbit of (1,0) = (b/a - 1, b/c - 1) has 4 elements, "
          "all congruent to it mod N/2; (1,2,1): (2,2) = (2D/(3ac))(1,1) is "
          "fixed by both reflections mod 12";
  return true;
}

}  // namespace

int main() {
  Gate gate;
  struct Criterion {
    const char* id;
    bool (*run)(std::string*);
  };
  const Criterion criteria[] = {
      {"1", criterion1},  {"2", criterion2}, {"3", criterion3},
      {"4", criterion4},  {"5", criterion5}, {"6", criterion6},
      {"7", criterion7},  {"8", criterion8}, {"9", criterion9},
      {"10", criterion10}};
  for (const Criterion& c : criteria) {
    std::string text;
    bool ok;
    try {
      ok = c.run(&text);
    } catch (const Error& e) {
      ok = false;
      text = std::string("threw ") + e.what();
    }
    gate.line(c.id, ok, text);
  }
  return gate.all ? 0 : 1;
}
