#include "speckron/permutation.hpp"

#include <algorithm>
#include <charconv>

#include "speckron/error.hpp"
#include "speckron/numeric.hpp"

namespace speckron {

Permutation Permutation::identity(int n) {
  std::vector<std::uint8_t> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  const auto n = images.size();
  if (n > 255) throw DomainError("permutation degree above 255 is unsupported");
  std::vector<std::uint8_t> zero(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    int v = images[i];
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw DomainError("not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    zero[i] = static_cast<std::uint8_t>(v - 1);
  }
  return Permutation(std::move(zero));
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      int a = cycle[j];
      if (a < 1 || a > n || used[static_cast<std::size_t>(a - 1)]) {
        throw DomainError("cycles must be disjoint and within 1..n");
      }
      used[static_cast<std::size_t>(a - 1)] = true;
      images[static_cast<std::size_t>(a - 1)] = cycle[(j + 1) % cycle.size()];
    }
  }
  return from_one_line(images);
}

namespace {

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == ',') {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc()) throw ParseError("malformed permutation '" + std::string(text) + "'");
    i = static_cast<std::size_t>(ptr - text.data());
    out.push_back(value);
  }
  return out;
}

}  // namespace

Permutation Permutation::parse_one_line(std::string_view text) {
  try {
    return from_one_line(parse_ints(text));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Permutation Permutation::parse_cycles(std::string_view text, int n) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("cycle notation must consist of '(...)' groups");
    auto close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError("unbalanced '(' in cycle notation");
    auto body = parse_ints(text.substr(i + 1, close - i - 1));
    if (!body.empty()) cycles.push_back(std::move(body));
    i = close + 1;
  }
  try {
    return from_cycles(cycles, n);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("composing permutations of different degree");
  std::vector<std::uint8_t> images(a.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a.images_[b.images_[i]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(std::uint64_t k) const {
  Permutation result = identity(degree());
  Permutation base = *this;
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (std::size_t j = start; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(static_cast<int>(j) + 1);
    }
    if (cycle.size() > 1) out.push_back(std::move(cycle));
  }
  return out;
}

Partition Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t j = start; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

std::uint64_t Permutation::order() const { return order_of(cycle_type()); }

std::string Permutation::to_one_line_string() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(images_[i] + 1);
  }
  return s;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(c[j]);
    }
    s += ')';
  }
  return s;
}

Permutation standard_permutation(const Partition& alpha) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int part : alpha.parts()) {
    std::vector<int> cycle;
    for (int j = 0; j < part; ++j) cycle.push_back(next++);
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(cycles, alpha.weight());
}

Partition cycle_type(const Permutation& pi) { return pi.cycle_type(); }

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.zero_based()) h = (h ^ v) * 1099511628211ull;
  return h;
}

}  // namespace speckron
