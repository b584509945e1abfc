// Compares the serial reference kernels against the OpenMP variants on the
// all-pairs W-distance workloads. Run with --large to include the 2080-chamber
// instance.

#include <chrono>
#include <cstring>
#include <iostream>

#include "twotrans/building.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace twotrans;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

void bench_instance(int rank, int q) {
  Building b(rank, q);
  long long pairs = static_cast<long long>(b.chamber_count()) * b.chamber_count();
  std::cout << "A" << rank << " over F" << q << ": " << b.chamber_count()
            << " chambers, " << pairs << " ordered pairs\n";

  auto t0 = clock_type::now();
  auto serial = pair_distance_histogram_serial(b);
  double ts = seconds_since(t0);

  t0 = clock_type::now();
  auto parallel = pair_distance_histogram_parallel(b);
  double tp = seconds_since(t0);

  bool equal = serial == parallel;
  std::cout << "  histogram  serial " << ts << " s   parallel " << tp
            << " s   speedup " << (tp > 0 ? ts / tp : 0.0)
            << (equal ? "" : "   MISMATCH") << "\n";

  if (rank <= 3) {
    t0 = clock_type::now();
    auto scan_s = scan_point_pairs_serial(b);
    double ss = seconds_since(t0);
    t0 = clock_type::now();
    auto scan_p = scan_point_pairs_parallel(b);
    double sp = seconds_since(t0);
    bool same = scan_s.common_min == scan_p.common_min &&
                scan_s.same_point_values == scan_p.same_point_values &&
                scan_s.cross_point_values == scan_p.cross_point_values;
    std::cout << "  pair scan  serial " << ss << " s   parallel " << sp
              << " s   speedup " << (sp > 0 ? ss / sp : 0.0)
              << (same ? "" : "   MISMATCH") << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool large = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--large") == 0) large = true;

#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; parallel variants fall back to serial\n";
#endif

  bench_instance(2, 2);
  bench_instance(2, 3);
  bench_instance(3, 2);
  if (large) bench_instance(3, 3);
  return 0;
}
