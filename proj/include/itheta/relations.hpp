// Linear relations among the orbit theta series of a fixed form.  Symbolic
// generators cover argument negation on asymmetric orbit pairs, vanishing of
// even symmetric orbits, the swap tau when a = c, and the shear tau_t when
// c/a is the square of a rational.  An exact kernel search on the computed
// series then cross-checks: kernel vectors inside the symbolic span are
// explained, the rest are candidates valid to the working precision only,
// never proven identities.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "itheta/orbits.hpp"
#include "itheta/qseries.hpp"

namespace itheta {

enum class RelationKind { Negation, EvenSymmetricZero, Tau, TauT, UnitVanishing };

// "negation", "even-symmetric-zero", "tau", "tau_t", "unit-vanishing".
std::string relation_kind_name(RelationKind k);

// One label asserts Theta_{f_L} = 0.  Two labels assert
// Theta_{f_{L0}} = sign * Theta_{f_{L1}}.  Labels are orbit representatives;
// shear records the t of a tau_t relation and is 0 for every other kind.
struct SymbolicRelation {
  RelationKind kind = RelationKind::Negation;
  std::vector<Point> labels;
  int sign = 1;
  Rational shear = 0;
};

// All relations of the four generator kinds among the admissible orbits of
// an analysis; UnitVanishing is part of the report vocabulary but is established
// through the unit bridge, not emitted here.
std::vector<SymbolicRelation> symbolic_relations(const QuadForm& Q,
                                                 const OrbitAnalysis& an);

struct RelationReport {
  long N = 1;
  long precision = 0;
  std::vector<Point> series_labels;        // one representative per +-pair
  std::vector<QSeries> series;             // aligned with series_labels
  std::vector<SymbolicRelation> symbolic;  // over all admissible orbits
  std::vector<std::vector<Rational>> kernel_basis;  // primitive integer rows
  std::vector<std::vector<Rational>> unexplained;   // outside symbolic span
  long explained_rank = 0;  // rank of the symbolic span on the labels
};

// Exact kernel of the column space of the matrix given by rows (each of
// length ncols).  Basis vectors are primitive integer vectors, one per free
// column of the reduced echelon form, in free-column order, with the first
// nonzero entry positive.
std::vector<std::vector<Rational>> rational_kernel(
    const std::vector<std::vector<Rational>>& rows, std::size_t ncols);

// Computes Theta_{Q,f_O} to precision M for every admissible orbit mod N,
// asserts each symbolic relation on the computed series, then finds the
// kernel of the series of the chosen representatives (one per +-pair, so the
// negation relations do not clutter it) and splits it into vectors implied
// by the symbolic relations and unexplained candidates.
RelationReport find_linear_relations(const QuadForm& Q, long N, long M);

}  // namespace itheta
