#include <random>

#include "doctest.h"
#include "itheta/errors.hpp"
#include "itheta/quadfield.hpp"

using namespace itheta;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

// Independent sign oracle: exact when D is a rational square, 512-bit floating
// interval otherwise (an irrational x + y*sqrt(D) with these magnitudes cannot
// sit within the interval width of zero).
int sign_oracle(const Rational& x, const Rational& y, const Rational& D) {
  Rational root;
  if (is_square(D, &root)) return sign_of(x + y * root);
  mpf_class fx(x, 512), fy(y, 512), fD(D, 512);
  mpf_class s(0, 512);
  mpf_sqrt(s.get_mpf_t(), fD.get_mpf_t());
  mpf_class val = fx + fy * s;
  mpf_class margin(1, 512);
  margin >>= 400;
  REQUIRE(abs(val) > margin);
  return sgn(val);
}

}  // namespace

TEST_CASE("norm, trace, conjugation") {
  QuadFieldElem z = qfe_make(Q(5, 2), Q(1), Q(21, 4));
  CHECK(qfe_norm(z) == 1);  // 25/4 - 21/4
  CHECK(qfe_trace(z) == 5);
  QuadFieldElem eps = qfe_make(Q(23, 2), Q(5), Q(21, 4));
  CHECK(qfe_norm(eps) == 1);
  CHECK(qfe_eq(qfe_conj(qfe_conj(z)), z));
  CHECK(qfe_norm(qfe_conj(z)) == qfe_norm(z));
  // Nm(z) = z * conj(z)
  QuadFieldElem p = qfe_mul(z, qfe_conj(z));
  CHECK(p.y == 0);
  CHECK(p.x == qfe_norm(z));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> dist(-30, 30);
  const Rational discs[] = {Q(21, 4), Q(8), Q(2), Q(9, 4), Q(4)};
  for (const Rational& D : discs) {
    for (int i = 0; i < 60; ++i) {
      QuadFieldElem a = qfe_make(Q(dist(rng), 3), Q(dist(rng), 2), D);
      QuadFieldElem b = qfe_make(Q(dist(rng)), Q(dist(rng), 5), D);
      QuadFieldElem c = qfe_make(Q(dist(rng), 7), Q(dist(rng)), D);
      CHECK(qfe_eq(qfe_mul(a, b), qfe_mul(b, a)));
      CHECK(qfe_eq(qfe_mul(a, qfe_mul(b, c)), qfe_mul(qfe_mul(a, b), c)));
      CHECK(qfe_eq(qfe_mul(a, qfe_add(b, c)),
                   qfe_add(qfe_mul(a, b), qfe_mul(a, c))));
      CHECK(qfe_norm(qfe_mul(a, b)) == qfe_norm(a) * qfe_norm(b));
      CHECK(qfe_eq(qfe_conj(qfe_mul(a, b)), qfe_mul(qfe_conj(a), qfe_conj(b))));
      if (sign_of(qfe_norm(a)) != 0) {
        CHECK(qfe_eq(qfe_mul(a, qfe_inv(a)), qfe_one(D)));
        CHECK(qfe_eq(qfe_pow(a, -2), qfe_inv(qfe_mul(a, a))));
      }
    }
  }
  CHECK_THROWS_AS(qfe_mul(qfe_one(Q(8)), qfe_one(Q(2))), DiscMismatch);
}

TEST_CASE("norm-zero inversion fails only in split fields") {
  // (3/2 + sqrt(9/4)) * (3/2 - sqrt(9/4)) = 0
  QuadFieldElem z = qfe_make(Q(3, 2), Q(-1), Q(9, 4));
  CHECK(qfe_norm(z) == 0);
  CHECK_THROWS_AS(qfe_inv(z), NonInvertible);
  QuadFieldElem w = qfe_make(Q(3, 2), Q(-1), Q(21, 4));
  CHECK(sign_of(qfe_norm(w)) != 0);
  CHECK(qfe_eq(qfe_mul(w, qfe_inv(w)), qfe_one(Q(21, 4))));
}

TEST_CASE("embedding signs match the oracle") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<long> dist(-40, 40);
  std::uniform_int_distribution<long> den(1, 9);
  const Rational discs[] = {Q(21, 4), Q(8), Q(3), Q(9, 4), Q(25), Q(1, 4)};
  int checked = 0;
  for (const Rational& D : discs) {
    for (int i = 0; i < 200; ++i) {
      Rational x = Q(dist(rng), den(rng)), y = Q(dist(rng), den(rng));
      QuadFieldElem z = qfe_make(x, y, D);
      auto [s1, s2] = qfe_embedding_signs(z);
      if (!(sign_of(x) == 0 && sign_of(y) == 0)) {
        Rational root;
        if (is_square(D, &root)) {
          CHECK(s1 == sign_of(x + y * root));
          CHECK(s2 == sign_of(x - y * root));
        } else {
          CHECK(s1 == sign_oracle(x, y, D));
          CHECK(s2 == sign_oracle(x, -y, D));
        }
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
  // zero of a split field: 3/2 - sqrt(9/4) vanishes in the first embedding
  auto [t1, t2] = qfe_embedding_signs(qfe_make(Q(3, 2), Q(-1), Q(9, 4)));
  CHECK(t1 == 0);
  CHECK(t2 > 0);
}

TEST_CASE("total positivity predicates") {
  CHECK(qfe_totally_positive(qfe_make(Q(5, 2), Q(1), Q(21, 4))));
  CHECK(!qfe_totally_positive(qfe_make(Q(1), Q(1), Q(8))));  // 1 - sqrt(8) < 0
  CHECK(qfe_totally_negative(qfe_make(Q(-5, 2), Q(-1), Q(21, 4))));
  CHECK(!qfe_totally_negative(qfe_zero(Q(8))));
  CHECK(!qfe_totally_positive(qfe_zero(Q(8))));
}

TEST_CASE("sector construction rejects degenerate rays") {
  Rational D = Q(21, 4);
  QuadFieldElem r1 = qfe_make(Q(5, 2), Q(-1), D);
  QuadFieldElem r2 = qfe_make(Q(5, 2), Q(1), D);
  CHECK_THROWS_AS(sector_make(r1, qfe_zero(D), true, true), InvalidSector);
  CHECK_THROWS_AS(sector_make(r1, qfe_scale(Q(-7, 3), r1), true, true),
                  InvalidSector);
  CHECK_NOTHROW(sector_make(r1, r2, false, true));
}

TEST_CASE("sector membership: edges, interior, origin") {
  Rational D = Q(21, 4);
  QuadFieldElem r1 = qfe_make(Q(5, 2), Q(-1), D);  // 5/2 - sqrt(D)
  QuadFieldElem r2 = qfe_make(Q(5, 2), Q(1), D);   // 5/2 + sqrt(D)
  for (bool c1 : {false, true})
    for (bool c2 : {false, true}) {
      ConeSector S = sector_make(r1, r2, c1, c2);
      CHECK(sector_contains(S, r1) == c1);
      CHECK(sector_contains(S, r2) == c2);
      CHECK(sector_contains(S, qfe_scale(Q(7, 5), r1)) == c1);
      CHECK(sector_contains(S, qfe_scale(Q(1, 3), r2)) == c2);
      CHECK(sector_contains(S, qfe_add(r1, r2)));          // interior
      CHECK(!sector_contains(S, qfe_zero(D)));             // origin excluded
      CHECK(!sector_contains(S, qfe_neg(qfe_add(r1, r2))));
      CHECK(!sector_contains(S, qfe_sub(r1, qfe_scale(Q(2), r2))));
    }
}

TEST_CASE("closed sectors are additively closed") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long> dist(-20, 20);
  Rational D = Q(8);
  QuadFieldElem r1 = qfe_make(Q(3), Q(-1), D);
  QuadFieldElem r2 = qfe_make(Q(1), Q(2), D);
  ConeSector S = sector_make(r1, r2, true, true);
  int hits = 0;
  for (int i = 0; i < 400; ++i) {
    QuadFieldElem z = qfe_make(Q(dist(rng), 2), Q(dist(rng), 3), D);
    QuadFieldElem w = qfe_make(Q(dist(rng)), Q(dist(rng), 2), D);
    if (sector_contains(S, z) && sector_contains(S, w)) {
      CHECK(sector_contains(S, qfe_add(z, w)));
      CHECK(sector_contains(S, qfe_scale(Q(3, 7), z)));
      ++hits;
    }
  }
  CHECK(hits > 10);
}
