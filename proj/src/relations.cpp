// Symbolic relation generators and the exact kernel search.  Every emitted
// relation is re-evaluated on the computed series and must hold on the nose;
// kernel vectors outside the symbolic span are reported as unexplained
// candidates at the working precision.
#include "itheta/relations.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "itheta/errors.hpp"
#include "itheta/theta.hpp"

namespace itheta {

namespace {

std::string point_str(const Point& P) {
  return "(" + std::to_string(P.first) + "," + std::to_string(P.second) + ")";
}

PeriodicFunction pf_negate_values(const PeriodicFunction& f) {
  PeriodicFunction g = pf_new(f.N);
  for (const auto& [key, v] : f.vals) {
    Rational w = -v;
    pf_set(g, key.first, key.second, w);
  }
  return g;
}

// +1 if g == f, -1 if g == -f, 0 otherwise, as functions on Z^2.
int match_sign(const PeriodicFunction& f, const PeriodicFunction& g) {
  if (pf_equal_as_functions(f, g)) return 1;
  if (pf_equal_as_functions(pf_negate_values(f), g)) return -1;
  return 0;
}

// Reduced row echelon form in place; returns the pivot column of each
// surviving row and drops the zero rows.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& rows,
                              std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational lead = rows[r][c];
    for (std::size_t j = c; j < ncols; ++j) rows[r][j] /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational m = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= m * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank_of(std::vector<std::vector<Rational>> rows,
                    std::size_t ncols) {
  return rref(rows, ncols).size();
}

// Scales v to a primitive integer vector with its first nonzero entry
// positive; v must be nonzero.
void primitivize(std::vector<Rational>& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm_int(den, x.get_den());
  Integer content = 0;
  for (auto& x : v) {
    x *= den;
    x.canonicalize();
    content = gcd_int(content, x.get_num());
  }
  int lead = 0;
  for (const auto& x : v) {
    if (x != 0) {
      lead = sign_of(x);
      break;
    }
  }
  Rational unit = make_rational(lead * content, 1);
  for (auto& x : v) x /= unit;
}

}  // namespace

std::string relation_kind_name(RelationKind k) {
  switch (k) {
    case RelationKind::Negation:
      return "negation";
    case RelationKind::EvenSymmetricZero:
      return "even-symmetric-zero";
    case RelationKind::Tau:
      return "tau";
    case RelationKind::TauT:
      return "tau_t";
    case RelationKind::UnitVanishing:
      return "unit-vanishing";
  }
  return "unknown";
}

std::vector<SymbolicRelation> symbolic_relations(const QuadForm& Q,
                                                 const OrbitAnalysis& an) {
  const long N = an.ctx.N;
  std::vector<const OrbitRecord*> adm;
  for (const auto& O : an.orbits)
    if (O.admissible) adm.push_back(&O);
  std::map<Point, PeriodicFunction> fn;
  for (const OrbitRecord* O : adm)
    fn.emplace(O->representative, orbit_sign_function(*O, N));

  std::vector<SymbolicRelation> out;

  // Negation, once per asymmetric pair: f_O(-x) is a sign function on -O,
  // so it is s * f_{-O} for a single global s, and negating the argument
  // negates the series, giving Theta_{f_O} = -s * Theta_{f_{-O}}.
  for (const OrbitRecord* O : adm) {
    if (O->symmetric || !(O->representative < O->partner)) continue;
    int s = match_sign(fn.at(O->partner),
                       pf_negate_arg(fn.at(O->representative)));
    if (s == 0)
      throw VerificationFailed(
          "negated sign function of orbit " + point_str(O->representative) +
          " does not match the sign function of " + point_str(O->partner));
    out.push_back(
        {RelationKind::Negation, {O->representative, O->partner}, -s, 0});
  }

  // Even symmetric orbits: f is even, negating the argument negates the
  // series, so the series is zero.
  for (const OrbitRecord* O : adm)
    if (O->symmetric && O->parity == 1)
      out.push_back(
          {RelationKind::EvenSymmetricZero, {O->representative}, 1, 0});

  // The swap tau(m,n) = (n,m) fixes Q when a = c and conjugates A to B, so
  // f_O o tau is a sign function on an orbit and the series is unchanged.
  if (Q.a == Q.c) {
    for (const OrbitRecord* O : adm) {
      PeriodicFunction tf = pf_tau(fn.at(O->representative));
      const OrbitRecord* target = nullptr;
      int s = 0;
      for (const OrbitRecord* P : adm) {
        s = match_sign(fn.at(P->representative), tf);
        if (s != 0) {
          target = P;
          break;
        }
      }
      if (target == nullptr)
        throw VerificationFailed("tau image of the orbit of " +
                                 point_str(O->representative) +
                                 " is not an orbit sign function");
      if (target->representative < O->representative) continue;
      out.push_back({RelationKind::Tau,
                     {O->representative, target->representative},
                     s,
                     0});
    }
  }

  // The shear tau_t(m,n) = (t n, m/t) fixes Q when c/a = t^2; it leaves Z^2
  // for part of the support unless t divides the support, so relations are
  // emitted only where the image is again an orbit sign function.
  Rational ratio = Q.c / Q.a;
  Rational t;
  if (is_square(ratio, &t) && t != 1) {
    for (const OrbitRecord* O : adm) {
      PeriodicFunction tf;
      try {
        tf = pf_tau_t(Q, fn.at(O->representative), t);
      } catch (const SupportNotPreserved&) {
        continue;
      }
      for (const OrbitRecord* P : adm) {
        int s = match_sign(fn.at(P->representative), tf);
        if (s == 0) continue;
        if (!(P->representative < O->representative))
          out.push_back({RelationKind::TauT,
                         {O->representative, P->representative},
                         s,
                         t});
        break;
      }
    }
  }

  return out;
}

std::vector<std::vector<Rational>> rational_kernel(
    const std::vector<std::vector<Rational>>& rows_in, std::size_t ncols) {
  std::vector<std::vector<Rational>> rows = rows_in;
  std::vector<std::size_t> pivots = rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> v(ncols, Rational(0));
    v[fc] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][fc];
    primitivize(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

RelationReport find_linear_relations(const QuadForm& Q, long N, long M) {
  OrbitAnalysis an = gn_orbits(Q, N);
  std::vector<const OrbitRecord*> adm;
  for (const auto& O : an.orbits)
    if (O.admissible) adm.push_back(&O);

  RelationReport rep;
  rep.N = N;
  rep.precision = M;
  rep.symbolic = symbolic_relations(Q, an);

  // Series for every admissible orbit: the symbolic relations are asserted
  // on the full family, the kernel then uses one column per +-pair.  The
  // quadrant scan inside theta_quadrant is already parallel.
  std::map<Point, QSeries> all;
  for (const OrbitRecord* O : adm)
    all.emplace(O->representative,
                theta_quadrant(Q, orbit_sign_function(*O, N), M));

  for (const auto& R : rep.symbolic) {
    bool ok = R.labels.size() == 1
                  ? qs_is_zero(all.at(R.labels[0]))
                  : qs_eq(all.at(R.labels[0]),
                          qs_scale(all.at(R.labels[1]), Rational(R.sign)));
    if (!ok)
      throw VerificationFailed(relation_kind_name(R.kind) +
                               " relation at orbit " + point_str(R.labels[0]) +
                               " fails below precision " + std::to_string(M));
  }

  std::map<Point, std::size_t> col;
  for (const OrbitRecord* O : adm) {
    if (!O->symmetric && O->partner < O->representative) continue;
    col.emplace(O->representative, rep.series_labels.size());
    rep.series_labels.push_back(O->representative);
    rep.series.push_back(all.at(O->representative));
  }
  const std::size_t k = rep.series_labels.size();

  std::vector<std::vector<Rational>> rows;
  for (long e = 0; e < M; ++e) {
    std::vector<Rational> row(k, Rational(0));
    bool nonzero = false;
    for (std::size_t j = 0; j < k; ++j) {
      row[j] = qs_coeff(rep.series[j], e);
      if (row[j] != 0) nonzero = true;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  rep.kernel_basis = rational_kernel(rows, k);

  // Each orbit series equals a sign times the series of its chosen
  // representative (by the asserted negation relations), so every symbolic
  // relation projects onto the chosen columns.
  std::map<Point, std::pair<std::size_t, int>> via;
  for (const auto& [P, j] : col) via.emplace(P, std::make_pair(j, 1));
  for (const auto& R : rep.symbolic)
    if (R.kind == RelationKind::Negation && via.count(R.labels[1]) == 0)
      via.emplace(R.labels[1], std::make_pair(col.at(R.labels[0]), R.sign));

  std::vector<std::vector<Rational>> sym_rows;
  for (const auto& R : rep.symbolic) {
    std::vector<Rational> v(k, Rational(0));
    const auto& [j0, c0] = via.at(R.labels[0]);
    v[j0] += c0;
    if (R.labels.size() == 2) {
      const auto& [j1, c1] = via.at(R.labels[1]);
      v[j1] -= Rational(R.sign * c1);
    }
    if (std::any_of(v.begin(), v.end(),
                    [](const Rational& x) { return x != 0; }))
      sym_rows.push_back(std::move(v));
  }
  const std::size_t base = rank_of(sym_rows, k);
  rep.explained_rank = static_cast<long>(base);
  for (const auto& v : rep.kernel_basis) {
    std::vector<std::vector<Rational>> aug = sym_rows;
    aug.push_back(v);
    if (rank_of(std::move(aug), k) > base) rep.unexplained.push_back(v);
  }

  return rep;
}

}  // namespace itheta
