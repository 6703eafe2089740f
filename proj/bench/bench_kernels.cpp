// Times the serial reference kernels against the OpenMP ones.
// Usage: bench_kernels [max_n] [repeats]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "speckron/group.hpp"
#include "speckron/kernels.hpp"
#include "speckron/steggall.hpp"

using namespace speckron;

namespace {

double best_of(int repeats, const std::function<void()>& body) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    body();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void row(const char* kernel, int n, double serial, double parallel) {
  std::printf("%-22s %3d %12.3f %12.3f %8.2fx\n", kernel, n, serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  const int max_n = argc > 1 ? std::atoi(argv[1]) : 9;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  std::printf("%-22s %3s %12s %12s %9s\n", "kernel", "n", "serial ms", "parallel ms", "speedup");

  for (int n = 6; n <= std::min(max_n, kMaxCosetDegree); ++n) {
    const auto H = cyclic_group(standard_permutation(Partition{n}));
    const auto K = young_subgroup(Partition{n - 2, 2});
    kernels::permutation_table(n);  // build outside the timed region
    const double s = best_of(repeats, [&] { double_cosets(H, K, Execution::Serial); });
    const double p = best_of(repeats, [&] { double_cosets(H, K, Execution::Parallel); });
    row("double cosets", n, s, p);
  }
  for (int n = 6; n <= std::min(max_n, kMaxPatternDegree); ++n) {
    kernels::permutation_table(n);
    const double s = best_of(repeats, [&] { enumerate_patterns(n, Execution::Serial); });
    const double p = best_of(repeats, [&] { enumerate_patterns(n, Execution::Parallel); });
    row("torus patterns", n, s, p);
  }
  return 0;
}
