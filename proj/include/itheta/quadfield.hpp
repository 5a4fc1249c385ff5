// Arithmetic in K = Q(sqrt(D)) for rational D > 0 (split if D is a square),
// with exact embedding signs and rational cone sectors.
#pragma once

#include <utility>

#include "itheta/rational.hpp"

namespace itheta {

// The element x + y*sqrt(D).
struct QuadFieldElem {
  Rational x, y, D;
};

QuadFieldElem qfe_make(const Rational& x, const Rational& y, const Rational& D);
QuadFieldElem qfe_zero(const Rational& D);
QuadFieldElem qfe_one(const Rational& D);

bool qfe_is_zero(const QuadFieldElem& z);
bool qfe_eq(const QuadFieldElem& a, const QuadFieldElem& b);

Rational qfe_norm(const QuadFieldElem& z);   // x^2 - D y^2
Rational qfe_trace(const QuadFieldElem& z);  // 2x
QuadFieldElem qfe_conj(const QuadFieldElem& z);
QuadFieldElem qfe_neg(const QuadFieldElem& z);
QuadFieldElem qfe_add(const QuadFieldElem& a, const QuadFieldElem& b);
QuadFieldElem qfe_sub(const QuadFieldElem& a, const QuadFieldElem& b);
QuadFieldElem qfe_mul(const QuadFieldElem& a, const QuadFieldElem& b);
QuadFieldElem qfe_scale(const Rational& c, const QuadFieldElem& z);
QuadFieldElem qfe_inv(const QuadFieldElem& z);          // NonInvertible on norm 0
QuadFieldElem qfe_pow(const QuadFieldElem& z, long k);  // k < 0 allowed

// Signs of the two real embeddings x + y*sqrt(D), x - y*sqrt(D); exact, 0 on zero.
std::pair<int, int> qfe_embedding_signs(const QuadFieldElem& z);
int qfe_embedding_sign(const Rational& x, const Rational& y, const Rational& D);
bool qfe_totally_positive(const QuadFieldElem& z);
bool qfe_totally_negative(const QuadFieldElem& z);

// Sector spanned by two non-proportional rays.
// edge_i_closed <=> the points on the ray through ray_i belong to the sector.
// The origin never belongs to a sector.
struct ConeSector {
  QuadFieldElem ray1, ray2;
  bool edge1_closed, edge2_closed;
};

ConeSector sector_make(const QuadFieldElem& ray1, const QuadFieldElem& ray2,
                       bool edge1_closed, bool edge2_closed);
bool sector_contains(const ConeSector& S, const QuadFieldElem& z);

}  // namespace itheta
