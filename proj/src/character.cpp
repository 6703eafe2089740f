#include "speckron/character.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "speckron/error.hpp"

namespace speckron {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::shared_mutex memo_mutex;
std::map<Key, std::int64_t> memo;

// chi^lambda on the class with parts mu[start..], lambda given by parts.
std::int64_t mn(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t start) {
  if (start == mu.size()) return lambda.empty() ? 1 : 0;
  Key key{lambda, std::vector<int>(mu.begin() + static_cast<std::ptrdiff_t>(start), mu.end())};
  {
    std::shared_lock lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }

  // Border strips of length r correspond to moving one bead of the beta-set
  // down by r onto an empty position; the sign is the parity of the beads
  // jumped over.
  const int r = mu[start];
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

  std::int64_t total = 0;
  for (int b : beta) {
    const int target = b - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (int c : beta) {
      if (c > target && c < b) ++jumped;
    }
    std::vector<int> moved = beta;
    std::replace(moved.begin(), moved.end(), b, target);
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> smaller;
    for (int i = 0; i < len; ++i) {
      int part = moved[static_cast<std::size_t>(i)] - (len - 1 - i);
      if (part > 0) smaller.push_back(part);
    }
    const std::int64_t sub = mn(smaller, mu, start + 1);
    total += (jumped % 2 == 0) ? sub : -sub;
  }

  std::unique_lock lock(memo_mutex);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw DomainError("mn_character: unequal weights");
  return mn(lambda.parts(), mu.parts(), 0);
}

std::int64_t dimension(const Partition& lambda) {
  return mn_character(lambda, Partition(std::vector<int>(static_cast<std::size_t>(lambda.weight()), 1)));
}

}  // namespace speckron
