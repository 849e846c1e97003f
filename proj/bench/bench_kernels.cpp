// Serial vs OpenMP timings for the two parallel kernels: the region grid scan
// and the exhaustive oracle. Each pair is also checked for identical output.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "phipsi/oracle.hpp"
#include "phipsi/regions.hpp"

namespace {

template <typename F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* name, double serial, double parallel, bool same) {
  std::cout << name << ": serial " << serial << " s, parallel " << parallel << " s, speedup "
            << (parallel > 0 ? serial / parallel : 0.0) << (same ? "" : "  OUTPUTS DIFFER") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  using namespace phipsi;
  const long n = argc > 1 ? std::atol(argv[1]) : 60;
  std::cout << "threads: " << omp_get_max_threads() << '\n';

  std::string serial_csv, parallel_csv;
  const double s1 = seconds([&] { serial_csv = scan_csv(Rational(1L, n), {}, false); });
  const double p1 = seconds([&] { parallel_csv = scan_csv(Rational(1L, n), {}, true); });
  report(("scan step 1/" + std::to_string(n)).c_str(), s1, p1, serial_csv == parallel_csv);

  const OracleQuery q{4, 4, 4, {Rational(1, 2), Rational(1, 2), Mode::constrained}};
  std::optional<OracleResult> serial_r, parallel_r;
  const double s2 = seconds([&] { serial_r = exhaustive_min_max_serial(q); });
  const double p2 = seconds([&] { parallel_r = exhaustive_min_max(q); });
  const bool same = serial_r && parallel_r && serial_r->value == parallel_r->value &&
                    serial_r->graph == parallel_r->graph;
  report("oracle (4,4,4) x=y=1/2", s2, p2, same);
  return 0;
}
