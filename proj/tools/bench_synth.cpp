// Times the advanced-search sweep, serial against OpenMP, on the bundled
// low-pass targets and a longer synthetic design, and checks that the two
// executions return identical results.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "memfir/filter_design.hpp"
#include "memfir/synthesis.hpp"

using namespace memfir;

namespace {

using clock_type = std::chrono::steady_clock;

double run_once(const CoefficientSet& targets, const SearchConfig& config,
                SynthesisResult& out) {
  const auto start = clock_type::now();
  out = synthesize_advanced(targets, config);
  return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

bool identical(const SynthesisResult& a, const SynthesisResult& b) {
  return a.r_feedback == b.r_feedback && a.objective == b.objective &&
         a.pairs == b.pairs && a.realized == b.realized;
}

void bench(const std::string& name, const CoefficientSet& targets, unsigned bits) {
  SearchConfig serial{.r_f_candidates = default_r_f_candidates(),
                      .grid = MemristanceGrid(1e3, 1e6, bits,
                                              GridSpacing::linear_resistance),
                      .execution = Execution::serial};
  SearchConfig parallel = serial;
  parallel.execution = Execution::parallel;

  SynthesisResult rs, rp;
  run_once(targets, serial, rs);  // warm-up
  const double t_serial = run_once(targets, serial, rs);
  const double t_parallel = run_once(targets, parallel, rp);

  std::printf("%-28s %2u-bit  serial %9.2f ms  parallel %9.2f ms  speedup %.2fx  %s\n",
              name.c_str(), bits, t_serial, t_parallel, t_serial / t_parallel,
              identical(rs, rp) ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; parallel execution falls back to serial\n");
#endif

  const CoefficientSet lowpass = design_windowed(
      {FilterFamily::lowpass, 400e3, 20e3, 16, Window::hamming});
  const CoefficientSet long_filter = design_windowed(
      {FilterFamily::lowpass, 400e3, 20e3, 63, Window::hamming});

  for (unsigned bits : {7u, 8u}) bench("lowpass order 16", lowpass, bits);
  for (unsigned bits : {7u, 8u}) bench("lowpass order 63", long_filter, bits);
  return 0;
}
