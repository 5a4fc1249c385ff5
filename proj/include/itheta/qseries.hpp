// Sparse truncated q-expansions with exact rational coefficients.  A series
// knows its own truncation order M: coefficients are exact for every
// exponent in [0, M) and unknown beyond.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "itheta/rational.hpp"

namespace itheta {

struct QSeries {
  long precision = 1;            // exponents in [0, precision) are known
  std::map<long, Rational> terms;  // nonzero coefficients only, sorted
};

QSeries qs_new(long M);
void qs_add_term(QSeries& s, long e, const Rational& c);  // accumulates
Rational qs_coeff(const QSeries& s, long e);

QSeries qs_add(const QSeries& s1, const QSeries& s2);  // precision = min
QSeries qs_scale(const QSeries& s, const Rational& k);
QSeries qs_neg(const QSeries& s);

bool qs_eq(const QSeries& s1, const QSeries& s2);  // PrecisionMismatch
bool qs_is_zero(const QSeries& s);
std::optional<std::pair<long, Rational>> qs_leading(const QSeries& s);

// "2*q^1 - 2*q^4 - 2*q^7 + O(q^9)"; unit coefficients print as "q^e",
// exponent zero prints the bare coefficient, the zero series as "O(q^M)".
std::string qs_to_text(const QSeries& s);

}  // namespace itheta
