#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>

#include <omp.h>

#include "speckron/error.hpp"
#include "speckron/execution.hpp"
#include "speckron/kernels.hpp"

namespace speckron {

void set_thread_count(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

}  // namespace speckron

namespace speckron::kernels {

PermutationTable::PermutationTable(int n) : n_(n) {
  if (n < 0 || n > 12) throw CapacityError("permutation tables are limited to n <= 12");
  factorials_.assign(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) factorials_[static_cast<std::size_t>(i)] = factorials_[static_cast<std::size_t>(i - 1)] * static_cast<std::uint32_t>(i);
  count_ = factorials_[static_cast<std::size_t>(n)];
  images_.resize(count_ * static_cast<std::size_t>(n));
  std::vector<std::uint8_t> current(static_cast<std::size_t>(n));
  std::iota(current.begin(), current.end(), std::uint8_t{0});
  for (std::size_t r = 0; r < count_; ++r) {
    std::copy(current.begin(), current.end(), images_.begin() + static_cast<std::ptrdiff_t>(r * static_cast<std::size_t>(n)));
    std::next_permutation(current.begin(), current.end());
  }
}

Permutation PermutationTable::permutation(std::size_t rank) const {
  std::vector<int> one_line(static_cast<std::size_t>(n_));
  const auto* p = at(rank);
  for (int i = 0; i < n_; ++i) one_line[static_cast<std::size_t>(i)] = p[i] + 1;
  return Permutation::from_one_line(one_line);
}

std::uint32_t PermutationTable::rank(const std::uint8_t* images) const {
  std::uint32_t r = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < n_; ++i) {
    const std::uint32_t v = images[i];
    const auto smaller_unused = v - static_cast<std::uint32_t>(std::popcount(used & ((1u << v) - 1u)));
    r += smaller_unused * factorials_[static_cast<std::size_t>(n_ - 1 - i)];
    used |= 1u << v;
  }
  return r;
}

std::shared_ptr<const PermutationTable> permutation_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const PermutationTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const PermutationTable>(n);
  return slot;
}

namespace {

constexpr int kMaxDegree = 16;

// out = g * x (g applied after x).
inline void left_mul(const std::uint8_t* g, const std::uint8_t* x, std::uint8_t* out, int n) {
  for (int j = 0; j < n; ++j) out[j] = g[x[j]];
}

// out = x * g (g applied first).
inline void right_mul(const std::uint8_t* x, const std::uint8_t* g, std::uint8_t* out, int n) {
  for (int j = 0; j < n; ++j) out[j] = x[g[j]];
}

}  // namespace

std::vector<std::uint32_t> coset_labels_serial(const PermutationTable& table,
                                               std::span<const Permutation> left,
                                               std::span<const Permutation> right) {
  constexpr auto kUnset = ~std::uint32_t{0};
  const int n = table.degree();
  std::vector<std::uint32_t> labels(table.size(), kUnset);
  std::deque<std::uint32_t> queue;
  std::uint8_t buf[kMaxDegree];
  // Flood fill from the least unvisited permutation; that seed is the least
  // element of its double coset.
  for (std::uint32_t seed = 0; seed < table.size(); ++seed) {
    if (labels[seed] != kUnset) continue;
    labels[seed] = seed;
    queue.push_back(seed);
    while (!queue.empty()) {
      const auto* x = table.at(queue.front());
      queue.pop_front();
      auto visit = [&](const std::uint8_t* y) {
        auto r = table.rank(y);
        if (labels[r] == kUnset) {
          labels[r] = seed;
          queue.push_back(r);
        }
      };
      for (const auto& g : left) {
        left_mul(g.zero_based().data(), x, buf, n);
        visit(buf);
      }
      for (const auto& g : right) {
        right_mul(x, g.zero_based().data(), buf, n);
        visit(buf);
      }
    }
  }
  return labels;
}

std::vector<std::uint32_t> coset_labels_parallel(const PermutationTable& table,
                                                 std::span<const Permutation> left,
                                                 std::span<const Permutation> right) {
  const int n = table.degree();
  const auto count = static_cast<std::int64_t>(table.size());
  const std::size_t degree = left.size() + right.size();

  std::vector<std::uint32_t> adjacency(table.size() * degree);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    std::uint8_t buf[kMaxDegree];
    const auto* x = table.at(static_cast<std::size_t>(i));
    auto* row = adjacency.data() + static_cast<std::size_t>(i) * degree;
    std::size_t t = 0;
    for (const auto& g : left) {
      left_mul(g.zero_based().data(), x, buf, n);
      row[t++] = table.rank(buf);
    }
    for (const auto& g : right) {
      right_mul(x, g.zero_based().data(), buf, n);
      row[t++] = table.rank(buf);
    }
  }

  // Min-label propagation with pointer jumping. Labels only ever decrease
  // and always name a member of the same orbit, so the fixed point labels
  // each orbit by its least rank.
  std::vector<std::uint32_t> labels(table.size());
  std::iota(labels.begin(), labels.end(), 0u);
  std::vector<std::uint32_t> next(table.size());
  bool changed = true;
  while (changed) {
    changed = false;
#pragma omp parallel for schedule(static) reduction(|| : changed)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto* row = adjacency.data() + static_cast<std::size_t>(i) * degree;
      std::uint32_t best = labels[static_cast<std::size_t>(i)];
      for (std::size_t t = 0; t < degree; ++t) best = std::min(best, labels[row[t]]);
      next[static_cast<std::size_t>(i)] = best;
      if (best != labels[static_cast<std::size_t>(i)]) changed = true;
    }
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      labels[static_cast<std::size_t>(i)] = next[next[static_cast<std::size_t>(i)]];
    }
  }
  return labels;
}

}  // namespace speckron::kernels
