#include "itheta/orbits.hpp"

#include <algorithm>
#include <deque>

#include "itheta/errors.hpp"

namespace itheta {

namespace {

LMat2 lmat_mul(const LMat2& X, const LMat2& Y, long N) {
  LMat2 Z{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      Z[i][j] = mod_long(X[i][0] * Y[0][j] + X[i][1] * Y[1][j], N);
  return Z;
}

Point lmat_apply(const LMat2& X, const Point& v, long N) {
  return {mod_long(X[0][0] * v.first + X[0][1] * v.second, N),
          mod_long(X[1][0] * v.first + X[1][1] * v.second, N)};
}

LMat2 lmat_id(long N) {
  return {{{mod_long(1, N), 0}, {0, mod_long(1, N)}}};
}

GroupContext make_context(const Integer& p, const Integer& r, long N) {
  GroupContext ctx;
  ctx.N = N;
  long pm = mod_long(p, N), rm = mod_long(r, N), neg1 = mod_long(-1, N);
  ctx.A = {{{neg1, pm}, {0, mod_long(1, N)}}};
  ctx.B = {{{mod_long(1, N), 0}, {rm, neg1}}};
  LMat2 AB = lmat_mul(ctx.A, ctx.B, N);
  LMat2 id = lmat_id(N);
  LMat2 minus_id = {{{neg1, 0}, {0, neg1}}};
  LMat2 pow = AB;
  long bound = N * N * N + 1;  // order divides |SL2(Z/N)| <= N^3
  ctx.ab_order = 1;
  ctx.minus_id = (pow == minus_id);
  while (!(pow == id)) {
    pow = lmat_mul(pow, AB, N);
    ++ctx.ab_order;
    if (pow == minus_id) ctx.minus_id = true;
    if (ctx.ab_order > bound)
      throw IterationExceeded("order of AB mod " + std::to_string(N));
  }
  if (N <= 2) ctx.minus_id = true;  // -id = id there
  return ctx;
}

Point neg_point(const Point& v, long N) {
  return {mod_long(-v.first, N), mod_long(-v.second, N)};
}

}  // namespace

OrbitAnalysis gn_orbits_pr(const Integer& p, const Integer& r, long N) {
  if (N < 1) throw Error("modulus must be positive, got " + std::to_string(N));
  OrbitAnalysis out;
  out.ctx = make_context(p, r, N);
  std::vector<char> visited(static_cast<size_t>(N) * N, 0);
  auto idx = [N](const Point& v) {
    return static_cast<size_t>(v.first) * N + v.second;
  };
  for (long m = 0; m < N; ++m) {
    for (long n = 0; n < N; ++n) {
      if (visited[idx({m, n})]) continue;
      // BFS closure under A and B with sign propagation from the
      // representative; a fixed point or an inconsistent edge marks the
      // orbit inadmissible.
      OrbitRecord O;
      std::map<Point, int> sign;
      std::deque<Point> queue{{m, n}};
      sign[{m, n}] = 1;
      visited[idx({m, n})] = 1;
      bool fixed_point_free = true, signs_consistent = true;
      while (!queue.empty()) {
        Point x = queue.front();
        queue.pop_front();
        O.points.push_back(x);
        for (const LMat2* M : {&out.ctx.A, &out.ctx.B}) {
          Point y = lmat_apply(*M, x, N);
          if (y == x) fixed_point_free = false;
          auto it = sign.find(y);
          if (it == sign.end()) {
            sign[y] = -sign[x];
            visited[idx(y)] = 1;
            queue.push_back(y);
          } else if (it->second != -sign[x]) {
            signs_consistent = false;
          }
        }
      }
      if (fixed_point_free != signs_consistent)
        throw VerificationFailed("admissibility criteria disagree on orbit of (" +
                                 std::to_string(m) + "," + std::to_string(n) +
                                 ") mod " + std::to_string(N));
      std::sort(O.points.begin(), O.points.end());
      O.representative = O.points.front();
      O.admissible = fixed_point_free;
      if (O.admissible) O.signs = std::move(sign);
      std::vector<Point> neg;
      neg.reserve(O.points.size());
      for (const Point& x : O.points) neg.push_back(neg_point(x, N));
      std::sort(neg.begin(), neg.end());
      O.partner = neg.front();
      O.symmetric = (neg == O.points);
      if (O.symmetric && O.admissible)
        O.parity = O.signs.at(neg_point(O.representative, N));
      out.orbits.push_back(std::move(O));
    }
  }
  return out;
}

OrbitAnalysis gn_orbits(const QuadForm& Q, long N) {
  return gn_orbits_pr(Q.p, Q.r, N);
}

PeriodicFunction orbit_sign_function(const OrbitRecord& O, long N) {
  if (!O.admissible)
    throw NotAdmissible("orbit of (" + std::to_string(O.representative.first) +
                        "," + std::to_string(O.representative.second) + ")");
  PeriodicFunction f = pf_new(N);
  for (const auto& [x, s] : O.signs) pf_set(f, x.first, x.second, Rational(s));
  return f;
}

bool contains_minus_id_pr(const Integer& p, const Integer& r, long N) {
  return make_context(p, r, N).minus_id;
}

bool contains_minus_id(const QuadForm& Q, long N) {
  return contains_minus_id_pr(Q.p, Q.r, N);
}

namespace {

bool is_odd_prime(long N) {
  if (N < 3 || N % 2 == 0) return false;
  for (long d = 3; d * d <= N; d += 2)
    if (N % d == 0) return false;
  return true;
}

long max_odd_divisor(long v) {
  while (v % 2 == 0) v /= 2;
  return v;
}

}  // namespace

std::pair<std::set<long>, long> prop_opp_residues(long N) {
  if (!is_odd_prime(N)) throw NotOddPrime(std::to_string(N));
  std::set<long> positive;
  for (long rho = 0; rho < N; ++rho)
    if (contains_minus_id_pr(1, rho, N)) positive.insert(rho);
  long expected = N - (max_odd_divisor(N - 1) + max_odd_divisor(N + 1)) / 2;
  if (static_cast<long>(positive.size()) != expected)
    throw VerificationFailed("residue count " +
                             std::to_string(positive.size()) + " != " +
                             std::to_string(expected) + " for N = " +
                             std::to_string(N));
  return {positive, expected};
}

bool prop_symodd_check(const QuadForm& Q, long N) {
  if (!is_odd_prime(N)) throw NotOddPrime(std::to_string(N));
  OrbitAnalysis an = gn_orbits(Q, N);
  if (an.ctx.minus_id) return true;
  for (const OrbitRecord& O : an.orbits)
    if (O.admissible && O.symmetric && O.parity != -1) return false;
  return true;
}

}  // namespace itheta
