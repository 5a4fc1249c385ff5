#include "itheta/periodic.hpp"

#include <numeric>

#include "itheta/errors.hpp"

namespace itheta {

PeriodicFunction pf_new(long N) {
  if (N < 1) throw Error("period must be positive, got " + std::to_string(N));
  PeriodicFunction f;
  f.N = N;
  return f;
}

void pf_set(PeriodicFunction& f, long m, long n, const Rational& v) {
  std::pair<long, long> key{mod_long(m, f.N), mod_long(n, f.N)};
  if (sign_of(v) == 0) {
    f.vals.erase(key);
  } else {
    // two-argument mpq_class construction skips canonicalization; scrub once
    Rational w = v;
    w.canonicalize();
    f.vals[key] = w;
  }
}

Rational pf_at(const PeriodicFunction& f, long m, long n) {
  auto it = f.vals.find({mod_long(m, f.N), mod_long(n, f.N)});
  return it == f.vals.end() ? Rational(0) : it->second;
}

Rational pf_at(const PeriodicFunction& f, const Integer& m, const Integer& n) {
  auto it = f.vals.find({mod_long(m, f.N), mod_long(n, f.N)});
  return it == f.vals.end() ? Rational(0) : it->second;
}

AdmissibilityReport pf_check_admissible_pr(const Integer& p, const Integer& r,
                                           const PeriodicFunction& f) {
  // A and B are involutions, so f(Ax) != -f(x) with f(x) = 0 forces a
  // violation visible from the support point Ax as well; scanning the
  // support decides the condition on all of (Z/N)^2.
  for (const auto& [key, v] : f.vals) {
    const auto& [m, n] = key;
    long am = mod_long(p * n - m, f.N);
    if (pf_at(f, am, n) != -v) {
      return {false, m, n,
              "f(Ax) != -f(x) at x = (" + std::to_string(m) + "," +
                  std::to_string(n) + ")"};
    }
    long bn = mod_long(r * m - n, f.N);
    if (pf_at(f, m, bn) != -v) {
      return {false, m, n,
              "f(Bx) != -f(x) at x = (" + std::to_string(m) + "," +
                  std::to_string(n) + ")"};
    }
  }
  return {};
}

AdmissibilityReport pf_check_admissible(const QuadForm& Q,
                                        const PeriodicFunction& f) {
  return pf_check_admissible_pr(Q.p, Q.r, f);
}

bool pf_check_line_sums(const QuadForm& Q, const PeriodicFunction& f) {
  // Within the horizontal line n = n0 the map m -> p n0 - m pairs up points
  // (fixing at most one, where the value must vanish); likewise vertically.
  for (const auto& [key, v] : f.vals) {
    const auto& [m, n] = key;
    long am = mod_long(Q.p * n - m, f.N);
    if (sign_of(pf_at(f, am, n) + v) != 0) return false;
    long bn = mod_long(Q.r * m - n, f.N);
    if (sign_of(pf_at(f, m, bn) + v) != 0) return false;
  }
  return true;
}

PeriodicFunction pf_negate_arg(const PeriodicFunction& f) {
  PeriodicFunction g = pf_new(f.N);
  for (const auto& [key, v] : f.vals)
    pf_set(g, -key.first, -key.second, v);
  return g;
}

PeriodicFunction pf_tau(const PeriodicFunction& f) {
  PeriodicFunction g = pf_new(f.N);
  for (const auto& [key, v] : f.vals) pf_set(g, key.second, key.first, v);
  return g;
}

PeriodicFunction pf_reduce_period(const PeriodicFunction& f) {
  // A divisor d of N is a period iff every support point keeps its value
  // under the two unit shifts by d; the shift orbits are cycles, so support
  // scans again suffice.
  for (long d = 1; d <= f.N; ++d) {
    if (f.N % d != 0) continue;
    bool ok = true;
    for (const auto& [key, v] : f.vals) {
      if (pf_at(f, key.first + d, key.second) != v ||
          pf_at(f, key.first, key.second + d) != v) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    PeriodicFunction g = pf_new(d);
    for (const auto& [key, v] : f.vals)
      pf_set(g, key.first, key.second, v);
    return g;
  }
  return f;
}

PeriodicFunction pf_tau_t(const QuadForm& Q, const PeriodicFunction& f,
                          const Rational& t) {
  if (sign_of(t) <= 0) throw Error("tau_t: t must be positive");
  if (Q.c / Q.a != t * t)
    throw Error("tau_t: form must satisfy c/a = t^2, got c/a = " +
                to_string(Q.c / Q.a) + ", t = " + to_string(t));
  if (f.vals.empty()) return pf_reduce_period(f);
  Rational tc(t);
  tc.canonicalize();
  if (!tc.get_num().fits_slong_p() || !tc.get_den().fits_slong_p())
    throw Error("tau_t: scale too large");
  long u = tc.get_num().get_si();
  long v = tc.get_den().get_si();
  // tau_t(m,n) = (u n / v, v m / u) must send every integer lift of the
  // support into Z^2: u | N, v | N, and u | m, v | n per support residue.
  if (f.N % u != 0 || f.N % v != 0)
    throw SupportNotPreserved("period " + std::to_string(f.N) +
                              " not divisible by " + to_string(tc));
  for (const auto& [key, w] : f.vals) {
    (void)w;
    if (key.first % u != 0 || key.second % v != 0)
      throw SupportNotPreserved("support point (" +
                                std::to_string(key.first) + "," +
                                std::to_string(key.second) +
                                ") leaves Z^2 under tau_t");
  }
  long Np = f.N * u * v;
  PeriodicFunction g = pf_new(Np);
  // g(u r, v s) = f(u s, v r); for a support entry (ab, bb) of f the
  // congruences u s = ab (mod N), v r = bb (mod N) divide out exactly.
  for (const auto& [key, w] : f.vals) {
    long ab = key.first, bb = key.second;
    for (long k = 0; k < v * v; ++k) {
      long m = mod_long(u * (bb / v + k * (f.N / v)), Np);
      for (long k2 = 0; k2 < u * u; ++k2) {
        long n = mod_long(v * (ab / u + k2 * (f.N / u)), Np);
        pf_set(g, m, n, w);
      }
    }
  }
  return pf_reduce_period(g);
}

bool pf_equal_as_functions(const PeriodicFunction& f,
                           const PeriodicFunction& g) {
  long L = std::lcm(f.N, g.N);
  for (const auto& [key, v] : f.vals)
    for (long i = 0; i < L / f.N; ++i)
      for (long j = 0; j < L / f.N; ++j)
        if (pf_at(g, key.first + i * f.N, key.second + j * f.N) != v)
          return false;
  for (const auto& [key, v] : g.vals)
    for (long i = 0; i < L / g.N; ++i)
      for (long j = 0; j < L / g.N; ++j)
        if (pf_at(f, key.first + i * g.N, key.second + j * g.N) != v)
          return false;
  return true;
}

}  // namespace itheta
