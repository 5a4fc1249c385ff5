// Wall-clock comparison of the parallel theta kernels against their serial
// references on (1,5/2,1) with the mod-3 orbit sign function.  The two
// computations must agree exactly; the point of the run is the speedup.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "itheta/orbits.hpp"
#include "itheta/periodic.hpp"
#include "itheta/qseries.hpp"
#include "itheta/theta.hpp"

using namespace itheta;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration<double, std::milli>(dt).count();
}

}  // namespace

int main(int argc, char** argv) {
  long M = 100000;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--prec") == 0 && i + 1 < argc) {
      M = std::atol(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: bench_theta [--prec M]\n");
      return 1;
    }
  }
  if (M < 1) {
    std::fprintf(stderr, "usage: bench_theta [--prec M]\n");
    return 1;
  }

  QuadForm Q = qf_new(1, Rational(5, 2), 1);
  OrbitAnalysis an = gn_orbits(Q, 3);
  const OrbitRecord* adm = nullptr;
  for (const auto& O : an.orbits)
    if (O.admissible) adm = &O;
  PeriodicFunction f = orbit_sign_function(*adm, 3);

  std::printf("%-10s %10s %12s %12s %8s %6s\n", "kernel", "prec",
              "serial ms", "parallel ms", "speedup", "equal");
  struct Row {
    const char* name;
    QSeries (*serial)(const QuadForm&, const PeriodicFunction&, long,
                      Admissibility);
    QSeries (*parallel)(const QuadForm&, const PeriodicFunction&, long,
                        Admissibility);
  };
  const Row rows[] = {{"quadrant", theta_quadrant_serial, theta_quadrant},
                      {"sector", theta_sector_serial, theta_sector}};
  bool all_equal = true;
  for (const Row& row : rows) {
    auto t0 = std::chrono::steady_clock::now();
    QSeries s = row.serial(Q, f, M, Admissibility::Require);
    double serial_ms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    QSeries p = row.parallel(Q, f, M, Admissibility::Require);
    double parallel_ms = ms_since(t0);
    bool equal = qs_eq(s, p);
    all_equal = all_equal && equal;
    std::printf("%-10s %10ld %12.1f %12.1f %8.2f %6s\n", row.name, M,
                serial_ms, parallel_ms, serial_ms / parallel_ms,
                equal ? "yes" : "no");
  }
  return all_equal ? 0 : 3;
}
