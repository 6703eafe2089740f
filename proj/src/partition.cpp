#include "speckron/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "speckron/error.hpp"
#include "speckron/numeric.hpp"

namespace speckron {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be weakly decreasing");
    }
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::from_multiplicities(const std::vector<std::pair<int, int>>& mults) {
  std::vector<int> parts;
  for (auto [part, mult] : mults) {
    if (mult < 0) throw DomainError("negative multiplicity");
    parts.insert(parts.end(), mult, part);
  }
  return from_unsorted(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::vector<int> parts;
  if (text.empty()) return Partition();
  while (true) {
    auto comma = text.find(',');
    std::string_view token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("malformed partition '" + std::string(text) + "'");
    }
    if (value <= 0) throw ParseError("partition parts must be positive");
    if (!parts.empty() && value > parts.back()) {
      throw ParseError("partition parts must be weakly decreasing");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return Partition(std::move(parts));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int p : parts_) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw DomainError("cannot enumerate partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_rec(n, n, prefix, out);
  return out;
}

std::size_t partition_index(const Partition& p) {
  using Index = std::map<Partition, std::size_t>;
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const Index>> cache;
  std::shared_ptr<const Index> index;
  {
    std::lock_guard lock(mutex);
    auto& slot = cache[p.weight()];
    if (!slot) {
      auto built = std::make_shared<Index>();
      auto all = enumerate_partitions(p.weight());
      for (std::size_t i = 0; i < all.size(); ++i) built->emplace(all[i], i);
      slot = std::move(built);
    }
    index = slot;
  }
  return index->at(p);
}

std::uint64_t order_of(const Partition& alpha) {
  std::uint64_t o = 1;
  for (int p : alpha.parts()) o = lcm_u64(o, static_cast<std::uint64_t>(p));
  return o;
}

Partition power_cycle_type(const Partition& alpha, std::uint64_t k) {
  if (k == 0) throw DomainError("power_cycle_type needs k >= 1");
  std::vector<int> parts;
  for (int l : alpha.parts()) {
    auto g = static_cast<int>(gcd_u64(static_cast<std::uint64_t>(l), k));
    parts.insert(parts.end(), g, l / g);
  }
  return Partition::from_unsorted(std::move(parts));
}

Partition repeat_parts(const Partition& alpha, int r) {
  if (r < 1) throw DomainError("repeat_parts needs r >= 1");
  std::vector<int> parts;
  for (int p : alpha.parts()) parts.insert(parts.end(), r, p);
  return Partition(std::move(parts));
}

Partition join(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition::from_unsorted(std::move(parts));
}

std::uint64_t z_of(const Partition& alpha) {
  std::uint64_t z = 1;
  for (auto [part, mult] : alpha.multiplicities()) {
    for (int j = 1; j <= mult; ++j) z *= static_cast<std::uint64_t>(part) * j;
  }
  return z;
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) {
    throw DomainError("dominance order compares partitions of equal weight only");
  }
  int sl = 0, sm = 0;
  for (std::size_t i = 0; i < std::max(lambda.length(), mu.length()); ++i) {
    sl += i < lambda.length() ? lambda[i] : 0;
    sm += i < mu.length() ? mu[i] : 0;
    if (sl > sm) return false;
  }
  return true;
}

Partition rectangle(int d, int n) {
  if (d <= 0 || n % d != 0) throw DomainError("rectangle: d must divide n");
  return Partition(std::vector<int>(static_cast<std::size_t>(n / d), d));
}

}  // namespace speckron
