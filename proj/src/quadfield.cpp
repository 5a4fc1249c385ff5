#include "itheta/quadfield.hpp"

#include "itheta/errors.hpp"

namespace itheta {

namespace {

void require_same_disc(const QuadFieldElem& a, const QuadFieldElem& b) {
  if (a.D != b.D)
    throw DiscMismatch("operands live in Q(sqrt(" + to_string(a.D) +
                       ")) and Q(sqrt(" + to_string(b.D) + "))");
}

}  // namespace

QuadFieldElem qfe_make(const Rational& x, const Rational& y, const Rational& D) {
  if (sign_of(D) <= 0)
    throw ParseError("field discriminant must be positive, got " + to_string(D));
  // two-argument mpq_class construction skips canonicalization, so scrub
  // user-supplied values here before exact comparisons see them
  QuadFieldElem z{x, y, D};
  z.x.canonicalize();
  z.y.canonicalize();
  z.D.canonicalize();
  return z;
}

QuadFieldElem qfe_zero(const Rational& D) { return qfe_make(0, 0, D); }
QuadFieldElem qfe_one(const Rational& D) { return qfe_make(1, 0, D); }

bool qfe_is_zero(const QuadFieldElem& z) {
  return sign_of(z.x) == 0 && sign_of(z.y) == 0;
}

bool qfe_eq(const QuadFieldElem& a, const QuadFieldElem& b) {
  require_same_disc(a, b);
  return a.x == b.x && a.y == b.y;
}

Rational qfe_norm(const QuadFieldElem& z) { return z.x * z.x - z.D * z.y * z.y; }

Rational qfe_trace(const QuadFieldElem& z) { return 2 * z.x; }

QuadFieldElem qfe_conj(const QuadFieldElem& z) { return {z.x, -z.y, z.D}; }

QuadFieldElem qfe_neg(const QuadFieldElem& z) { return {-z.x, -z.y, z.D}; }

QuadFieldElem qfe_add(const QuadFieldElem& a, const QuadFieldElem& b) {
  require_same_disc(a, b);
  return {a.x + b.x, a.y + b.y, a.D};
}

QuadFieldElem qfe_sub(const QuadFieldElem& a, const QuadFieldElem& b) {
  require_same_disc(a, b);
  return {a.x - b.x, a.y - b.y, a.D};
}

QuadFieldElem qfe_mul(const QuadFieldElem& a, const QuadFieldElem& b) {
  require_same_disc(a, b);
  return {a.x * b.x + a.D * a.y * b.y, a.x * b.y + a.y * b.x, a.D};
}

QuadFieldElem qfe_scale(const Rational& c, const QuadFieldElem& z) {
  return {c * z.x, c * z.y, z.D};
}

// 1/z = conj(z)/Nm(z).
QuadFieldElem qfe_inv(const QuadFieldElem& z) {
  Rational n = qfe_norm(z);
  if (sign_of(n) == 0)
    throw NonInvertible("norm-zero element " + to_string(z.x) + " + " +
                        to_string(z.y) + "*sqrt(" + to_string(z.D) + ")");
  return {z.x / n, -z.y / n, z.D};
}

QuadFieldElem qfe_pow(const QuadFieldElem& z, long k) {
  QuadFieldElem base = k < 0 ? qfe_inv(z) : z;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  QuadFieldElem acc = qfe_one(z.D);
  while (e) {
    if (e & 1) acc = qfe_mul(acc, base);
    base = qfe_mul(base, base);
    e >>= 1;
  }
  return acc;
}

// Mixed signs are decided by the sign of (x + y sqrt(D))(x - y sqrt(D)) = x^2 - D y^2.
int qfe_embedding_sign(const Rational& x, const Rational& y, const Rational& D) {
  int sx = sign_of(x), sy = sign_of(y);
  if (sy == 0) return sx;
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  int c = sign_of(x * x - D * y * y);
  return sx > 0 ? c : -c;
}

std::pair<int, int> qfe_embedding_signs(const QuadFieldElem& z) {
  return {qfe_embedding_sign(z.x, z.y, z.D), qfe_embedding_sign(z.x, -z.y, z.D)};
}

bool qfe_totally_positive(const QuadFieldElem& z) {
  auto [s1, s2] = qfe_embedding_signs(z);
  return s1 > 0 && s2 > 0;
}

bool qfe_totally_negative(const QuadFieldElem& z) {
  auto [s1, s2] = qfe_embedding_signs(z);
  return s1 < 0 && s2 < 0;
}

ConeSector sector_make(const QuadFieldElem& ray1, const QuadFieldElem& ray2,
                       bool edge1_closed, bool edge2_closed) {
  require_same_disc(ray1, ray2);
  if (qfe_is_zero(ray1) || qfe_is_zero(ray2))
    throw InvalidSector("zero ray");
  if (ray1.x * ray2.y - ray2.x * ray1.y == 0)
    throw InvalidSector("rays are proportional over Q");
  return ConeSector{ray1, ray2, edge1_closed, edge2_closed};
}

// Unique decomposition z = alpha*ray1 + beta*ray2 over Q. A point on the ray
// through ray1 has beta = 0, so edge1_closed governs whether beta may vanish,
// and likewise edge2_closed governs alpha.
bool sector_contains(const ConeSector& S, const QuadFieldElem& z) {
  require_same_disc(S.ray1, z);
  if (qfe_is_zero(z)) return false;
  Rational det = S.ray1.x * S.ray2.y - S.ray2.x * S.ray1.y;
  Rational alpha = (z.x * S.ray2.y - S.ray2.x * z.y) / det;
  Rational beta = (S.ray1.x * z.y - z.x * S.ray1.y) / det;
  bool alpha_ok = S.edge2_closed ? sign_of(alpha) >= 0 : sign_of(alpha) > 0;
  bool beta_ok = S.edge1_closed ? sign_of(beta) >= 0 : sign_of(beta) > 0;
  return alpha_ok && beta_ok;
}

}  // namespace itheta
