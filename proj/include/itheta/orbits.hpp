// Orbits of the group generated by the two reflections A and B acting on
// (Z/N)^2, with admissibility classification and canonical sign functions.
// An orbit is admissible iff no point of it is fixed by A or by B; on an
// admissible orbit the alternating character assigns each point a sign that
// flips across every A- or B-edge.
#pragma once

#include <array>
#include <set>
#include <utility>
#include <vector>

#include "itheta/periodic.hpp"
#include "itheta/quadform.hpp"

namespace itheta {

using Point = std::pair<long, long>;
using LMat2 = std::array<std::array<long, 2>, 2>;  // entries reduced mod N

struct OrbitRecord {
  std::vector<Point> points;           // sorted lexicographically
  Point representative{0, 0};          // points.front()
  std::map<Point, int> signs;          // +1/-1 per point; admissible only
  bool admissible = false;
  bool symmetric = false;              // -O == O
  int parity = 0;                      // +1 even, -1 odd, 0 n/a
  Point partner{0, 0};                 // representative of -O
};

struct GroupContext {
  long N = 1;
  LMat2 A{}, B{};
  long ab_order = 1;          // multiplicative order of AB mod N
  bool minus_id = false;      // some power of AB equals -id (true for N <= 2)
};

struct OrbitAnalysis {
  GroupContext ctx;
  std::vector<OrbitRecord> orbits;  // ordered by representative
};

OrbitAnalysis gn_orbits(const QuadForm& Q, long N);
OrbitAnalysis gn_orbits_pr(const Integer& p, const Integer& r, long N);

// The +-1 function supported on an admissible orbit, +1 at the
// representative, with period N.
PeriodicFunction orbit_sign_function(const OrbitRecord& O, long N);

bool contains_minus_id(const QuadForm& Q, long N);
bool contains_minus_id_pr(const Integer& p, const Integer& r, long N);

// Sweeps all residues rho of rp mod N (N an odd prime) and returns those
// whose group contains -id, verifying the count N - (n1+n2)/2 where n1, n2
// are the maximal odd divisors of N-1 and N+1.
std::pair<std::set<long>, long> prop_opp_residues(long N);

// True iff -id lies in the group or every symmetric admissible orbit is odd
// (N an odd prime); always true, verified rather than assumed.
bool prop_symodd_check(const QuadForm& Q, long N);

}  // namespace itheta
