#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace speckron {

/// A weakly decreasing sequence of positive integers. The empty partition
/// is the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  /// Throws DomainError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition from_unsorted(std::vector<int> parts);

  /// Builds from (part, multiplicity) pairs in any order.
  static Partition from_multiplicities(const std::vector<std::pair<int, int>>& mults);

  /// Parses "4,2,2" (whitespace tolerated). The empty string is the empty
  /// partition. Throws ParseError on anything else that is not weakly
  /// decreasing positive integers.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Distinct parts with multiplicities, largest part first.
  std::vector<std::pair<int, int>> multiplicities() const;

  /// Inverse of parse: "4,2,2".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Reverse-lexicographic order: (n) first, (1^n) last. This is the index
/// order of every matrix and every sorted output.
struct RevLex {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

/// Position of a partition inside enumerate_partitions(weight). Cached per
/// weight; safe to call concurrently.
std::size_t partition_index(const Partition& p);

/// lcm of the parts; the order of any permutation of this cycle type.
std::uint64_t order_of(const Partition& alpha);

/// Cycle type of sigma^k where sigma has cycle type alpha.
Partition power_cycle_type(const Partition& alpha, std::uint64_t k);

/// Each part repeated r times.
Partition repeat_parts(const Partition& alpha, int r);

/// Concatenation of parts, re-sorted.
Partition join(const Partition& a, const Partition& b);

/// z_alpha = prod_i i^{m_i} m_i!, the centralizer order of cycle type alpha.
std::uint64_t z_of(const Partition& alpha);

/// Dominance order. Throws DomainError on unequal weights.
bool dominance_leq(const Partition& lambda, const Partition& mu);

/// Partition (d, d, ..., d) of n; d must divide n.
Partition rectangle(int d, int n);

}  // namespace speckron
