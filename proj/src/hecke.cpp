#include "itheta/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "itheta/errors.hpp"
#include "itheta/theta.hpp"

namespace itheta {

namespace {

Rational rat_abs(const Rational& x) {
  return sign_of(x) < 0 ? Rational(-x) : x;
}

std::string qfe_str(const QuadFieldElem& z) {
  return "(" + to_string(z.x) + ", " + to_string(z.y) + ")";
}

// Column Hermite form of a rank-2 integer lattice: basis (a, b), (0, w)
// with a, w > 0 and 0 <= b < w.
struct Hnf {
  Integer a, b, w;
};

Hnf hnf_cols(const std::vector<std::pair<Integer, Integer>>& gens) {
  Integer a = 0, b = 0, w = 0;
  for (const auto& gen : gens) {
    Integer x = gen.first, y = gen.second;
    if (x == 0) {
      w = gcd_int(w, y);
      continue;
    }
    if (a == 0) {
      if (x < 0) {
        x = -x;
        y = -y;
      }
      a = x;
      b = y;
      continue;
    }
    Integer g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(),
               x.get_mpz_t());
    Integer nb = u * b + v * y;
    Integer lw = (a / g) * y - (x / g) * b;
    a = g;
    b = nb;
    w = gcd_int(w, lw);
  }
  if (a == 0 || w == 0)
    throw InvalidLattice("generators do not span a rank-2 lattice");
  if (w < 0) w = -w;
  b %= w;
  if (b < 0) b += w;
  return {a, b, w};
}

// Largest elementary divisor of Z^2 / L: det over the gcd of the entries.
long lattice_exponent(const Hnf& B) {
  Integer d1 = gcd_int(B.a, gcd_int(B.b, B.w));
  return Integer((B.a * B.w) / d1).get_si();
}

// Returns the coset rebuilt through the canonicalizing constructors, since
// the caller may have filled the aggregate with raw two-argument rationals.
HeckeCoset validate_coset(const HeckeCoset& C_in) {
  auto remake = [](const QuadFieldElem& z) {
    return qfe_make(z.x, z.y, z.D);
  };
  HeckeCoset C{lattice_make(remake(C_in.lattice.e1), remake(C_in.lattice.e2)),
               remake(C_in.shift), C_in.mult, remake(C_in.unit)};
  C.mult.canonicalize();
  const QuadFieldElem &e1 = C.lattice.e1, &e2 = C.lattice.e2, &g = C.shift;
  const Rational& D = e1.D;
  if (e2.D != D || g.D != D || C.unit.D != D)
    throw DiscMismatch("coset parts live in different fields: D = " +
                       to_string(D) + ", " + to_string(e2.D) + ", " +
                       to_string(g.D) + ", " + to_string(C.unit.D));
  if (e1.x * e2.y == e1.y * e2.x)
    throw InvalidLattice("basis " + qfe_str(e1) + ", " + qfe_str(e2) +
                         " is linearly dependent");
  if (sign_of(C.mult) <= 0)
    throw NotPositiveCoefficients("d = " + to_string(C.mult));
  if (qfe_eq(C.unit, qfe_one(D))) throw UnitIsOne("eps = 1");
  if (qfe_norm(C.unit) != 1 || !qfe_totally_positive(C.unit))
    throw InvalidUnit("eps = " + qfe_str(C.unit) +
                      " must be totally positive with norm 1");
  if (!coset_preserved_by(C, C.unit))
    throw InvalidUnit("eps = " + qfe_str(C.unit) +
                      " does not preserve the coset");
  // d*Nm is integral on Lambda + gamma iff the six Gram values are integers:
  // expanding Nm(gamma + s e1 + t e2) leaves exactly these coefficients.
  auto need_int = [](const Rational& val, const char* what) {
    if (!is_integer(val))
      throw NonIntegralExponent(std::string(what) + " = " + to_string(val));
  };
  auto mixed = [](const QuadFieldElem& u, const QuadFieldElem& v) -> Rational {
    return qfe_norm(qfe_add(u, v)) - qfe_norm(u) - qfe_norm(v);
  };
  need_int(C.mult * qfe_norm(e1), "d*Nm(e1)");
  need_int(C.mult * qfe_norm(e2), "d*Nm(e2)");
  need_int(C.mult * mixed(e1, e2), "d*Tr(e1*conj(e2))");
  need_int(C.mult * qfe_norm(g), "d*Nm(gamma)");
  need_int(C.mult * mixed(g, e1), "d*Tr(gamma*conj(e1))");
  need_int(C.mult * mixed(g, e2), "d*Tr(gamma*conj(e2))");
  return C;
}

long first_difference(const QSeries& x, const QSeries& y, long M) {
  for (long e = 0; e < M; ++e)
    if (qs_coeff(x, e) != qs_coeff(y, e)) return e;
  return -1;
}

}  // namespace

QuadLattice lattice_make(const QuadFieldElem& e1, const QuadFieldElem& e2) {
  if (e1.D != e2.D)
    throw DiscMismatch("basis discriminants " + to_string(e1.D) + " and " +
                       to_string(e2.D));
  if (e1.x * e2.y == e1.y * e2.x)
    throw InvalidLattice("basis " + qfe_str(e1) + ", " + qfe_str(e2) +
                         " is linearly dependent");
  return {e1, e2};
}

std::pair<Rational, Rational> lattice_coords(const QuadLattice& L,
                                             const QuadFieldElem& z) {
  const QuadFieldElem &e1 = L.e1, &e2 = L.e2;
  if (z.D != e1.D)
    throw DiscMismatch("element discriminant " + to_string(z.D) +
                       " vs lattice " + to_string(e1.D));
  Rational det = e1.x * e2.y - e1.y * e2.x;
  Rational u = (z.x * e2.y - e2.x * z.y) / det;
  Rational v = (e1.x * z.y - e1.y * z.x) / det;
  // inputs may carry uncanonicalized two-argument rationals
  u.canonicalize();
  v.canonicalize();
  return {u, v};
}

bool lattice_contains(const QuadLattice& L, const QuadFieldElem& z) {
  auto [u, v] = lattice_coords(L, z);
  return is_integer(u) && is_integer(v);
}

bool coset_preserved_by(const HeckeCoset& C, const QuadFieldElem& u) {
  Rational nm = qfe_norm(u);
  nm.canonicalize();
  if (nm != 1 && nm != -1)
    throw InvalidUnit("Nm(u) = " + to_string(nm) + " for u = " + qfe_str(u));
  return lattice_contains(C.lattice, qfe_mul(u, C.lattice.e1)) &&
         lattice_contains(C.lattice, qfe_mul(u, C.lattice.e2)) &&
         lattice_contains(C.lattice, qfe_sub(qfe_mul(u, C.shift), C.shift));
}

long stabilizer_power(const QuadFieldElem& eps,
                      const std::vector<HeckeCoset>& targets, long max_iter) {
  QuadFieldElem power = eps;
  for (long j = 1; j <= max_iter; ++j) {
    bool all = true;
    for (const auto& target : targets)
      if (!coset_preserved_by(target, power)) {
        all = false;
        break;
      }
    if (all) return j;
    power = qfe_mul(power, eps);
  }
  throw IterationExceeded("no power of eps up to " + std::to_string(max_iter) +
                          " preserves every coset");
}

QSeries theta_hecke(const HeckeCoset& C_in, long M) {
  const HeckeCoset C = validate_coset(C_in);
  const Rational& D = C.lattice.e1.D;
  QSeries out = qs_new(M);
  // k = 1 + eps satisfies eps*conj(k) = k and is totally positive; one
  // eps-period of the positive cone runs from the conj(k) ray (kept) to the
  // k ray (dropped), and the negative domain is the exact mirror.
  QuadFieldElem k = qfe_add(qfe_one(D), C.unit);
  QuadFieldElem kb = qfe_conj(k);
  ConeSector pos = sector_make(k, kb, false, true);
  ConeSector neg = sector_make(qfe_neg(k), qfe_neg(kb), false, true);
  // Unimodular change of basis making E2 rational: E2 = (W, 0), W != 0.
  Integer dy = lcm_int(C.lattice.e1.y.get_den(), C.lattice.e2.y.get_den());
  Integer z1 = to_integer(C.lattice.e1.y * dy);
  Integer z2 = to_integer(C.lattice.e2.y * dy);
  QuadFieldElem E1, E2;
  {
    Integer g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), z1.get_mpz_t(),
               z2.get_mpz_t());
    E1 = qfe_add(qfe_scale(Rational(u), C.lattice.e1),
                 qfe_scale(Rational(v), C.lattice.e2));
    E2 = qfe_add(qfe_scale(Rational(-z2 / g), C.lattice.e1),
                 qfe_scale(Rational(z1 / g), C.lattice.e2));
  }
  const Rational &gx = C.shift.x, &gy = C.shift.y;
  const Rational &X0 = E1.x, &Y0 = E1.y, &W = E2.x;
  // Every contributing lambda has |Nm| < M/d and both embeddings of one
  // sign.  The edge rays k and conj(k) have embedding ratios E and 1/E with
  // E = max embedding of eps, and a positive combination keeps its ratio
  // between those of the rays, so lambda'^2 = (lambda'/lambda'') * |Nm| is
  // below E * M/d; emax bounds E and |lambda_y| is below B_up / (2 sqrt(D)).
  Rational lo = sqrt_lower(D);
  Rational emax = rat_abs(C.unit.x) + rat_abs(C.unit.y) * sqrt_upper(D);
  Rational Md = Rational(M) / C.mult;
  Rational B_up = sqrt_upper(emax * Md);
  Rational Yb = B_up / (2 * lo);
  auto int_range = [](const Rational& t1, const Rational& t2) {
    Rational u1 = t1, u2 = t2;
    if (u1 > u2) std::swap(u1, u2);
    return std::pair<long, long>(ceil_int(u1).get_si(),
                                 floor_int(u2).get_si());
  };
  auto [a_lo, a_hi] = int_range((-Yb - gy) / Y0, (Yb - gy) / Y0);
  for (long i = a_lo; i <= a_hi; ++i) {
    Rational Y = gy + i * Y0;
    Rational C0 = gx + i * X0;
    // |Nm| < M/d pins lambda_x into (|Y| sqrt(D), sqrt(D Y^2 + M/d)] and
    // its mirror; the rational brackets only widen, exact filters decide.
    Rational U = sqrt_upper(D * Y * Y + Md);
    Rational Lg = rat_abs(Y) * lo;
    for (int side = 0; side < 2; ++side) {
      Rational xlo = side ? -U : Lg;
      Rational xhi = side ? -Lg : U;
      auto [b_lo, b_hi] = int_range((xlo - C0) / W, (xhi - C0) / W);
      for (long bq = b_lo; bq <= b_hi; ++bq) {
        QuadFieldElem z = qfe_make(C0 + bq * W, Y, D);
        auto [s1, s2] = qfe_embedding_signs(z);
        int sgn = 0;
        if (s1 > 0 && s2 > 0 && sector_contains(pos, z))
          sgn = 1;
        else if (s1 < 0 && s2 < 0 && sector_contains(neg, z))
          sgn = -1;
        if (sgn == 0) continue;
        Rational e = C.mult * qfe_norm(z);
        if (e >= M) continue;
        if (!is_integer(e))
          throw NonIntegralExponent("d*Nm(lambda) = " + to_string(e) +
                                    " at lambda = " + qfe_str(z));
        qs_add_term(out, to_integer(e).get_si(), sgn);
      }
    }
  }
  return out;
}

std::vector<HeckeCoset> decomposition_cosets(const CosetDecomposition& dec) {
  QuadFieldElem epsj = qfe_pow(dec.unit, dec.index);
  std::vector<HeckeCoset> out;
  for (const auto& g : dec.shifts)
    out.push_back({dec.sublattice, g, dec.mult, epsj});
  return out;
}

QfToHeckeResult qf_to_hecke(const QuadForm& Q, const PeriodicFunction& f,
                            long M) {
  for (const auto& [xy, v] : f.vals)
    if (v != 1 && v != -1)
      throw ValueSetUnsupported("f = " + to_string(v) + " at (" +
                                std::to_string(xy.first) + "," +
                                std::to_string(xy.second) + ")");
  QfToHeckeResult res;
  const long N = f.N;
  std::vector<std::pair<long, long>> S1;
  std::set<std::pair<long, long>> S1set;
  for (const auto& [xy, v] : f.vals)
    if (v == 1) {
      S1.push_back(xy);
      S1set.insert(xy);
    }
  std::sort(S1.begin(), S1.end());
  // Lambda1 = all translations fixing the positive support as a set.
  std::vector<std::pair<Integer, Integer>> gens = {{Integer(N), Integer(0)},
                                                   {Integer(0), Integer(N)}};
  for (long v1 = 0; v1 < N; ++v1)
    for (long v2 = 0; v2 < N; ++v2) {
      if (v1 == 0 && v2 == 0) continue;
      bool ok = true;
      for (const auto& s : S1)
        if (!S1set.count({(s.first + v1) % N, (s.second + v2) % N})) {
          ok = false;
          break;
        }
      if (ok) gens.push_back({Integer(v1), Integer(v2)});
    }
  Hnf B = hnf_cols(gens);
  long alpha = B.a.get_si(), beta = B.b.get_si(), delta = B.w.get_si();
  auto in_sub = [&](long dm, long dn) {
    if (dm % alpha != 0) return false;
    return mod_long(dn - (dm / alpha) * beta, delta) == 0;
  };
  std::vector<std::pair<long, long>> reps;
  for (const auto& s : S1) {
    bool found = false;
    for (const auto& r : reps)
      if (in_sub(s.first - r.first, s.second - r.second)) {
        found = true;
        break;
      }
    if (!found) reps.push_back(s);
  }
  if (static_cast<long>(reps.size()) * ((N * N) / (alpha * delta)) !=
      static_cast<long>(S1.size()))
    throw VerificationFailed("cosets do not cover the positive support");
  res.decomp.sub_basis = {{alpha, beta}, {0, delta}};
  res.decomp.sublattice = lattice_make(qf_embed(Q, alpha, beta),
                                       qf_embed(Q, 0, delta));
  res.decomp.unit = qf_epsilon(Q);
  res.decomp.mult = 1 / Q.c;
  for (const auto& r : reps) {
    res.decomp.shift_points.push_back(r);
    res.decomp.shifts.push_back(qf_embed(Q, r.first, r.second));
  }
  std::vector<HeckeCoset> bases;
  for (const auto& g : res.decomp.shifts)
    bases.push_back({res.decomp.sublattice, g, res.decomp.mult,
                     res.decomp.unit});
  res.decomp.index = stabilizer_power(res.decomp.unit, bases);
  res.lhs = qs_scale(theta_quadrant(Q, f, M), res.decomp.index);
  res.rhs = qs_new(M);
  for (const auto& coset : decomposition_cosets(res.decomp))
    res.rhs = qs_add(res.rhs, theta_hecke(coset, M));
  res.verdict = qs_eq(res.lhs, res.rhs);
  if (!res.verdict) res.first_diff = first_difference(res.lhs, res.rhs, M);
  return res;
}

HeckeToQfResult hecke_to_qf(const HeckeCoset& C_in, long M) {
  const HeckeCoset C = validate_coset(C_in);
  const Rational& D = C.lattice.e1.D;
  QuadFieldElem k = qfe_add(qfe_one(D), C.unit);
  Rational Trk = qfe_trace(k), Nmk = qfe_norm(k);
  // Coordinates with respect to (1, k): z = m + n k.  eps != 1 guarantees
  // k.y != 0 (a rational norm-one totally positive unit is 1).
  auto coords = [&](const QuadFieldElem& z) {
    Rational n = z.y / k.y;
    return std::pair<Rational, Rational>(z.x - n * k.x, n);
  };
  const QuadFieldElem elems[6] = {C.lattice.e1,
                                  C.lattice.e2,
                                  C.shift,
                                  qfe_conj(C.lattice.e1),
                                  qfe_conj(C.lattice.e2),
                                  qfe_conj(C.shift)};
  Integer M0 = 1;
  for (const auto& z : elems) {
    auto [cm, cn] = coords(z);
    M0 = lcm_int(M0, lcm_int(cm.get_den(), cn.get_den()));
  }
  auto icoords = [&](const QuadFieldElem& z) {
    auto [cm, cn] = coords(z);
    return std::pair<Integer, Integer>(to_integer(cm * M0),
                                       to_integer(cn * M0));
  };
  // Side one is Lambda+gamma; side two is -conj(Lambda+gamma), whose
  // lattice part is conj(Lambda) and whose shift is -conj(gamma).
  Hnf B1 = hnf_cols({icoords(C.lattice.e1), icoords(C.lattice.e2)});
  Hnf B2 = hnf_cols(
      {icoords(qfe_conj(C.lattice.e1)), icoords(qfe_conj(C.lattice.e2))});
  long Np = std::lcm(lattice_exponent(B1), lattice_exponent(B2));
  HeckeToQfResult res;
  res.scale = M0.get_si();
  res.fn = pf_new(Np);
  auto add_side = [&](const std::pair<Integer, Integer>& shift, const Hnf& B,
                      int sgn) {
    long alpha = B.a.get_si(), beta = B.b.get_si(), delta = B.w.get_si();
    long sm = mod_long(shift.first, Np), sn = mod_long(shift.second, Np);
    for (long i = 0; i < Np / alpha; ++i)
      for (long j = 0; j < Np / delta; ++j) {
        long m = mod_long(sm + i * alpha, Np);
        long n = mod_long(sn + i * beta + j * delta, Np);
        pf_set(res.fn, m, n, pf_at(res.fn, m, n) + sgn);
      }
  };
  add_side(icoords(C.shift), B1, 1);
  add_side(icoords(qfe_neg(qfe_conj(C.shift))), B2, -1);
  // On the support, x -> -eps*conj(x) acts as (m,n) -> (m, -m-n) and
  // x -> -conj(x) as (m,n) -> (-m - Tr(k) n, n); both must negate fn.
  for (const auto& [xy, v] : res.fn.vals) {
    long m = xy.first, n = xy.second;
    if (pf_at(res.fn, m, mod_long(-m - n, Np)) != -v)
      throw VerificationFailed("support not antisymmetric under (m, -m-n) at (" +
                               std::to_string(m) + "," + std::to_string(n) +
                               ")");
    Rational bx = -Rational(m) - Trk * n;
    if (!is_integer(bx))
      throw VerificationFailed("conjugation leaves the scaled lattice at (" +
                               std::to_string(m) + "," + std::to_string(n) +
                               ")");
    if (pf_at(res.fn, mod_long(to_integer(bx), Np), n) != -v)
      throw VerificationFailed(
          "support not antisymmetric under conjugation at (" +
          std::to_string(m) + "," + std::to_string(n) + ")");
  }
  Rational M02 = Rational(M0) * Rational(M0);
  res.a = C.mult / M02;
  res.b = C.mult * Trk / (2 * M02);
  res.c = C.mult * Nmk / M02;
  if (sign_of(res.a) <= 0 || sign_of(res.b) <= 0 || sign_of(res.c) <= 0 ||
      sign_of(res.b * res.b - res.a * res.c) <= 0)
    throw VerificationFailed("rebuilt form is not positive indefinite");
  res.lhs = theta_quadrant_raw(res.a, res.b, res.c, res.fn, M);
  res.rhs = theta_hecke(C, M);
  res.verdict = qs_eq(res.lhs, res.rhs);
  if (!res.verdict) res.first_diff = first_difference(res.lhs, res.rhs, M);
  return res;
}

UnitVanishingVerdict unit_vanishing(const HeckeCoset& C, const QuadFieldElem& delta,
                             long M) {
  UnitVanishingVerdict v;
  v.series = qs_new(M);
  v.totally_negative = qfe_totally_negative(delta);
  v.norm_one = (qfe_norm(delta) == 1);
  v.preserves = v.norm_one && coset_preserved_by(C, delta);
  v.hypotheses = v.totally_negative && v.norm_one && v.preserves;
  if (v.hypotheses) {
    v.series = theta_hecke(C, M);
    v.series_zero = !qs_leading(v.series).has_value();
    v.verdict = v.series_zero;
  }
  return v;
}

}  // namespace itheta
