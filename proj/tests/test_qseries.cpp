#include <random>

#include "doctest.h"
#include "itheta/errors.hpp"
#include "itheta/qseries.hpp"

using namespace itheta;

namespace {
Rational Q_(long n, long d = 1) { return make_rational(n, d); }

QSeries sample9() {
  QSeries s = qs_new(9);
  qs_add_term(s, 1, Q_(2));
  qs_add_term(s, 4, Q_(-2));
  qs_add_term(s, 7, Q_(-2));
  return s;
}

QSeries random_series(std::mt19937& rng, long M) {
  std::uniform_int_distribution<long> expd(0, M - 1);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  QSeries s = qs_new(M);
  for (int i = 0; i < 12; ++i)
    qs_add_term(s, expd(rng), Q_(num(rng), den(rng)));
  return s;
}
}  // namespace

TEST_CASE("terms accumulate and cancel") {
  QSeries s = qs_new(9);
  qs_add_term(s, 1, Q_(2));
  qs_add_term(s, 4, Q_(-2));
  qs_add_term(s, 4, Q_(2));
  CHECK(s.terms.size() == 1);
  CHECK(qs_coeff(s, 1) == 2);
  CHECK(qs_coeff(s, 4) == 0);
  CHECK_THROWS_AS(qs_add_term(s, 9, Q_(1)), Error);
  CHECK_THROWS_AS(qs_add_term(s, -1, Q_(1)), Error);
  CHECK_THROWS_AS(qs_new(0), Error);
}

TEST_CASE("addition truncates to the shorter precision") {
  QSeries a = qs_new(9);
  qs_add_term(a, 1, Q_(2));
  qs_add_term(a, 4, Q_(-2));
  QSeries b = qs_new(6);
  qs_add_term(b, 4, Q_(2));
  QSeries c = qs_add(a, b);
  CHECK(c.precision == 6);
  CHECK(qs_coeff(c, 1) == 2);
  CHECK(qs_coeff(c, 4) == 0);
  CHECK(c.terms.size() == 1);
}

TEST_CASE("module axioms on random series") {
  std::mt19937 rng(55);
  for (int i = 0; i < 40; ++i) {
    QSeries a = random_series(rng, 30), b = random_series(rng, 30),
            c = random_series(rng, 30);
    CHECK(qs_eq(qs_add(a, b), qs_add(b, a)));
    CHECK(qs_eq(qs_add(a, qs_add(b, c)), qs_add(qs_add(a, b), c)));
    Rational k = Q_(3, 7);
    CHECK(qs_eq(qs_scale(qs_add(a, b), k),
                qs_add(qs_scale(a, k), qs_scale(b, k))));
    CHECK(qs_is_zero(qs_add(a, qs_neg(a))));
    CHECK(qs_is_zero(qs_scale(a, Q_(0))));
  }
}

TEST_CASE("equality demands matching precision") {
  QSeries a = qs_new(9), b = qs_new(10);
  CHECK_THROWS_AS(qs_eq(a, b), PrecisionMismatch);
  QSeries s = sample9();
  CHECK(qs_eq(s, s));
  QSeries t = sample9();
  qs_add_term(t, 2, Q_(1, 3));
  CHECK(!qs_eq(s, t));
}

TEST_CASE("leading term") {
  auto lead = qs_leading(sample9());
  REQUIRE(lead.has_value());
  CHECK(lead->first == 1);
  CHECK(lead->second == 2);
  CHECK(!qs_leading(qs_new(5)).has_value());
}

TEST_CASE("text rendering") {
  CHECK(qs_to_text(sample9()) == "2*q^1 - 2*q^4 - 2*q^7 + O(q^9)");
  CHECK(qs_to_text(qs_new(5)) == "O(q^5)");
  QSeries s = qs_new(8);
  qs_add_term(s, 0, Q_(-3, 2));
  qs_add_term(s, 2, Q_(1));
  qs_add_term(s, 5, Q_(-1, 4));
  CHECK(qs_to_text(s) == "-3/2 + q^2 - 1/4*q^5 + O(q^8)");
  QSeries t = qs_new(4);
  qs_add_term(t, 3, Q_(-1));
  CHECK(qs_to_text(t) == "-q^3 + O(q^4)");
}
