// Times the OpenMP census kernel against the serial reference and checks
// that both produce identical tables.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "fkt/enumerate.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

using clock_type = std::chrono::steady_clock;

static double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

static bool same(const fkt::Census& a, const fkt::Census& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto& x = a.rows[i];
    const auto& y = b.rows[i];
    if (x.diagrams != y.diagrams || x.odd != y.odd ||
        x.with_stably_even != y.with_stably_even ||
        x.certificate_found != y.certificate_found || x.all_mixed != y.all_mixed ||
        x.iteratively_odd_by_order != y.iteratively_odd_by_order)
      return false;
  }
  return true;
}

int main(int argc, char** argv) {
  int max_chords = argc > 1 ? std::atoi(argv[1]) : 6;
  int components = argc > 2 ? std::atoi(argv[2]) : 1;
  if (max_chords > fkt::kHardChordCeiling) max_chords = fkt::kHardChordCeiling;

#if defined(_OPENMP)
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (compiled without OpenMP)\n";
#endif
  std::cout << "census up to " << max_chords << " chords, " << components
            << " component(s)\n";

  auto t0 = clock_type::now();
  fkt::Census serial = fkt::census_reference(max_chords, components, max_chords);
  double ts = seconds_since(t0);
  std::cout << "serial reference: " << ts << " s\n";

  t0 = clock_type::now();
  fkt::Census parallel = fkt::census(max_chords, components, max_chords);
  double tp = seconds_since(t0);
  std::cout << "parallel kernel:  " << tp << " s\n";

  if (!same(serial, parallel)) {
    std::cout << "MISMATCH between serial and parallel census\n";
    return 1;
  }
  std::cout << "tables agree";
  if (tp > 0) std::cout << "; speedup x" << ts / tp;
  std::cout << "\n";
  for (const auto& r : serial.rows)
    std::cout << "  chords " << r.chords << ": " << r.diagrams << " classes\n";
  return 0;
}
