#include <algorithm>
#include <compare>
#include <deque>
#include <numeric>

#include "speckron/kernels.hpp"

namespace speckron::kernels {

namespace {

constexpr int kMaxDegree = 16;

// out_j = x_{(j + r) mod n} + k mod n, zero-based.
inline void torus(const std::uint8_t* x, int r, int k, std::uint8_t* out, int n) {
  for (int j = 0; j < n; ++j) out[j] = static_cast<std::uint8_t>((x[(j + r) % n] + k) % n);
}

}  // namespace

PatternCensus steggall_census_serial(const PermutationTable& table) {
  const int n = table.degree();
  PatternCensus census;
  std::vector<bool> visited(table.size(), false);
  std::uint8_t buf[kMaxDegree];
  for (std::uint32_t seed = 0; seed < table.size(); ++seed) {
    if (visited[seed]) continue;
    const auto* x = table.at(seed);
    std::uint64_t orbit = 0;
    for (int r = 0; r < n; ++r) {
      for (int k = 0; k < n; ++k) {
        torus(x, r, k, buf, n);
        auto rank = table.rank(buf);
        if (!visited[rank]) {
          visited[rank] = true;
          ++orbit;
        }
      }
    }
    census.canonical_ranks.push_back(seed);
    census.stabilizer_orders.push_back(static_cast<int>(static_cast<std::uint64_t>(n) * n / orbit));
  }
  return census;
}

PatternCensus steggall_census_parallel(const PermutationTable& table) {
  const int n = table.degree();
  const auto count = static_cast<std::int64_t>(table.size());
  std::vector<std::pair<std::uint32_t, int>> found;

  // The orbit minimum starts with value 0, and for each rotation r only the
  // translation that sends the first entry to 0 can compete. So x is
  // canonical iff x_0 = 0 and no normalized rotation is smaller; the
  // rotations that reproduce x exactly are the stabilizer.
#pragma omp parallel
  {
    std::vector<std::pair<std::uint32_t, int>> local;
    std::uint8_t buf[kMaxDegree];
#pragma omp for schedule(dynamic, 4096) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      const auto* x = table.at(static_cast<std::size_t>(i));
      if (x[0] != 0) continue;
      bool canonical = true;
      int fixes = 0;
      for (int r = 0; r < n && canonical; ++r) {
        torus(x, r, (n - x[r]) % n, buf, n);
        const auto order = std::lexicographical_compare_three_way(buf, buf + n, x, x + n);
        if (order < 0) {
          canonical = false;
        } else if (order == 0) {
          ++fixes;
        }
      }
      if (canonical) local.emplace_back(static_cast<std::uint32_t>(i), fixes);
    }
#pragma omp critical
    found.insert(found.end(), local.begin(), local.end());
  }
  std::sort(found.begin(), found.end());
  PatternCensus census;
  for (auto [rank, stab] : found) {
    census.canonical_ranks.push_back(rank);
    census.stabilizer_orders.push_back(stab);
  }
  return census;
}

}  // namespace speckron::kernels
