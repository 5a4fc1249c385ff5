#include "itheta/qseries.hpp"

#include "itheta/errors.hpp"

namespace itheta {

QSeries qs_new(long M) {
  if (M < 1)
    throw Error("series precision must be positive, got " + std::to_string(M));
  QSeries s;
  s.precision = M;
  return s;
}

void qs_add_term(QSeries& s, long e, const Rational& c) {
  if (e < 0 || e >= s.precision)
    throw Error("exponent " + std::to_string(e) + " outside [0, " +
                std::to_string(s.precision) + ")");
  auto it = s.terms.find(e);
  if (it == s.terms.end()) {
    if (sign_of(c) != 0) s.terms.emplace(e, c);
    return;
  }
  it->second += c;
  if (sign_of(it->second) == 0) s.terms.erase(it);
}

Rational qs_coeff(const QSeries& s, long e) {
  auto it = s.terms.find(e);
  return it == s.terms.end() ? Rational(0) : it->second;
}

QSeries qs_add(const QSeries& s1, const QSeries& s2) {
  QSeries out = qs_new(std::min(s1.precision, s2.precision));
  for (const auto& [e, c] : s1.terms)
    if (e < out.precision) qs_add_term(out, e, c);
  for (const auto& [e, c] : s2.terms)
    if (e < out.precision) qs_add_term(out, e, c);
  return out;
}

QSeries qs_scale(const QSeries& s, const Rational& k) {
  QSeries out = qs_new(s.precision);
  if (sign_of(k) == 0) return out;
  for (const auto& [e, c] : s.terms) out.terms.emplace(e, c * k);
  return out;
}

QSeries qs_neg(const QSeries& s) { return qs_scale(s, Rational(-1)); }

bool qs_eq(const QSeries& s1, const QSeries& s2) {
  if (s1.precision != s2.precision)
    throw PrecisionMismatch(std::to_string(s1.precision) +
                            " != " + std::to_string(s2.precision));
  return s1.terms == s2.terms;
}

bool qs_is_zero(const QSeries& s) { return s.terms.empty(); }

std::optional<std::pair<long, Rational>> qs_leading(const QSeries& s) {
  if (s.terms.empty()) return std::nullopt;
  return *s.terms.begin();
}

std::string qs_to_text(const QSeries& s) {
  std::string out;
  for (const auto& [e, c] : s.terms) {
    bool neg = sign_of(c) < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rational mag = neg ? Rational(-c) : c;
    if (e == 0) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += "q^" + std::to_string(e);
    }
  }
  if (!out.empty()) out += " + ";
  out += "O(q^" + std::to_string(s.precision) + ")";
  return out;
}

}  // namespace itheta
