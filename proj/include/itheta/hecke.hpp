// Lattice-coset theta series over a real quadratic field: a rank-2 lattice
// coset Lambda + gamma with a totally positive norm-one unit eps acting on
// it, summed with signs over one fundamental sector pair of the unit's
// action, plus the two constructive translations between form data (Q, f)
// and coset data.
//
// The fundamental domain uses k = 1 + eps, which satisfies eps*conj(k) = k
// and is totally positive: the positive cone is cut along the rays through
// k and conj(k), keeping the conj(k) ray and dropping the k ray, and the
// negative domain is the exact mirror.  Multiplication by eps carries the
// dropped ray onto the kept one with the same sign and exponent, so the
// series does not depend on which of the two rays is kept.
#pragma once

#include <utility>
#include <vector>

#include "itheta/periodic.hpp"
#include "itheta/qseries.hpp"
#include "itheta/quadfield.hpp"
#include "itheta/quadform.hpp"

namespace itheta {

struct QuadLattice {
  QuadFieldElem e1, e2;
};

// Validates matching discriminants and Q-linear independence of the basis.
QuadLattice lattice_make(const QuadFieldElem& e1, const QuadFieldElem& e2);

// Rational coordinates (u, v) with z = u*e1 + v*e2.
std::pair<Rational, Rational> lattice_coords(const QuadLattice& L,
                                             const QuadFieldElem& z);
bool lattice_contains(const QuadLattice& L, const QuadFieldElem& z);

struct HeckeCoset {
  QuadLattice lattice;
  QuadFieldElem shift;  // gamma: the coset is Lambda + gamma
  Rational mult;        // d > 0 with d*Nm integral on the coset
  QuadFieldElem unit;   // eps: totally positive, norm one, preserving
};

// True iff u*e1 and u*e2 lie in Lambda and u*gamma - gamma does.  Requires
// |Nm(u)| = 1, which makes multiplication by u unimodular on the lattice,
// so containment of the basis images already gives equality.
bool coset_preserved_by(const HeckeCoset& C, const QuadFieldElem& u);

// Smallest j >= 1 such that eps^j preserves every target coset.  The set of
// such exponents is a subgroup of Z, so every later preserving power is a
// multiple of the returned one.
long stabilizer_power(const QuadFieldElem& eps,
                      const std::vector<HeckeCoset>& targets,
                      long max_iter = 64);

// Sum of sign(lambda) * q^(d*Nm(lambda)) over the coset points inside the
// fundamental sector pair, truncated at q^M.
QSeries theta_hecke(const HeckeCoset& C, long M);

struct CosetDecomposition {
  QuadLattice sublattice;                            // embedded Lambda1
  std::vector<QuadFieldElem> shifts;                 // embedded coset reps
  std::vector<std::pair<long, long>> shift_points;   // reps in [0,N)^2
  std::pair<std::pair<long, long>, std::pair<long, long>> sub_basis;
  long index = 1;       // smallest j with eps^j preserving every coset
  QuadFieldElem unit;   // the base unit eps = (b + sqrt(D))/(b - sqrt(D))
  Rational mult;        // 1/c
};

// The cosets of a decomposition as HeckeCoset values carrying eps^index.
std::vector<HeckeCoset> decomposition_cosets(const CosetDecomposition& dec);

struct QfToHeckeResult {
  CosetDecomposition decomp;
  bool verdict = false;
  long first_diff = -1;  // first exponent where the two sides differ
  QSeries lhs;           // index * theta_quadrant(Q, f)
  QSeries rhs;           // sum of theta_hecke over the cosets
};

// Splits the set f^{-1}(+1) into cosets of its translation stabilizer
// lattice, embeds them, and checks the index identity
//   index * Theta_{Q,f} = sum_i theta_hecke(Lambda1 + x_i, eps^index).
QfToHeckeResult qf_to_hecke(const QuadForm& Q, const PeriodicFunction& f,
                            long M);

struct HeckeToQfResult {
  Rational a, b, c;      // quadrant-sum coefficients; p, r can be fractional
  PeriodicFunction fn;   // the scaled two-sided indicator, period N'
  long scale = 1;        // least M0 with M0 * (coset coordinates) in Z^2
  bool verdict = false;
  long first_diff = -1;
  QSeries lhs;           // quadrant sum of the rebuilt (Q'', f'')
  QSeries rhs;           // theta_hecke(C)
};

// Rewrites theta_hecke(C) as a quadrant sum: coordinates with respect to
// (1, k), k = 1 + eps, turn d*Nm into the form d*(m^2 + Tr(k) mn + Nm(k) n^2),
// and the union (Lambda+gamma) with -conj(Lambda+gamma) becomes the support
// of a periodic two-sided indicator after integer rescaling.
HeckeToQfResult hecke_to_qf(const HeckeCoset& C, long M);

struct UnitVanishingVerdict {
  bool totally_negative = false;  // delta totally negative
  bool norm_one = false;          // Nm(delta) = 1
  bool preserves = false;         // delta preserves Lambda + gamma
  bool hypotheses = false;        // all three above
  bool series_zero = false;       // theta_hecke(C, M) vanished
  bool verdict = false;           // hypotheses and series_zero
  QSeries series;
};

// When a totally negative norm-one delta preserves the coset, the series
// must vanish; the verdict object records which hypothesis failed, and the
// series is only computed (and asserted zero) when all of them hold.
UnitVanishingVerdict unit_vanishing(const HeckeCoset& C, const QuadFieldElem& delta,
                             long M);

}  // namespace itheta
