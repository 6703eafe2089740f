#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "speckron/partition.hpp"

namespace speckron {

/// A bijection of {1..n}. Stored zero-based; every public index and every
/// textual form is one-based.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);

  /// One-line notation, one-based: images[i-1] = pi(i). Throws DomainError
  /// unless the images form a permutation of 1..n.
  static Permutation from_one_line(const std::vector<int>& images);

  /// Disjoint cycles over 1..n; points not mentioned are fixed.
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int n);

  /// "3 1 2"
  static Permutation parse_one_line(std::string_view text);
  /// "(1 3 2)(4 5)"; "()" or "" is the identity. n is the degree.
  static Permutation parse_cycles(std::string_view text, int n);

  int degree() const { return static_cast<int>(images_.size()); }
  /// pi(i), one-based in and out.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)] + 1; }

  const std::vector<std::uint8_t>& zero_based() const { return images_; }
  std::vector<int> one_line() const;

  /// (a * b)(i) = a(b(i)): b acts first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  Permutation pow(std::uint64_t k) const;
  bool is_identity() const;

  /// Nontrivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<int>> cycles() const;
  Partition cycle_type() const;
  std::uint64_t order() const;

  std::string to_one_line_string() const;
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on one-line notation.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  explicit Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {}
  std::vector<std::uint8_t> images_;
};

/// Cycles of lengths alpha_1, alpha_2, ... filled with 1..n in increasing
/// order, e.g. (4,2,1) -> (1 2 3 4)(5 6)(7).
Permutation standard_permutation(const Partition& alpha);

Partition cycle_type(const Permutation& pi);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace speckron
