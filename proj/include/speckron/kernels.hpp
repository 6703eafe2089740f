#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "speckron/permutation.hpp"

// Data-parallel kernels over all n! permutations, each with the serial
// reference implementation it is checked against.
namespace speckron::kernels {

/// Every permutation of degree n, zero-based one-line form, in
/// lexicographic order; index == lexicographic rank.
class PermutationTable {
 public:
  explicit PermutationTable(int n);

  int degree() const { return n_; }
  std::size_t size() const { return count_; }
  const std::uint8_t* at(std::size_t rank) const { return images_.data() + rank * static_cast<std::size_t>(n_); }
  Permutation permutation(std::size_t rank) const;

  /// Lexicographic rank of a zero-based one-line permutation, O(n).
  std::uint32_t rank(const std::uint8_t* images) const;

 private:
  int n_;
  std::size_t count_;
  std::vector<std::uint8_t> images_;
  std::vector<std::uint32_t> factorials_;
};

/// Shared table per degree; built once.
std::shared_ptr<const PermutationTable> permutation_table(int n);

/// For each rank, the rank of the least element of its double coset
/// <left> x <right> (left acts by g*x, right by x*g).
std::vector<std::uint32_t> coset_labels_serial(const PermutationTable& table,
                                               std::span<const Permutation> left,
                                               std::span<const Permutation> right);
std::vector<std::uint32_t> coset_labels_parallel(const PermutationTable& table,
                                                 std::span<const Permutation> left,
                                                 std::span<const Permutation> right);

/// Orbits of the torus action (index rotation, value translation mod n).
struct PatternCensus {
  std::vector<std::uint32_t> canonical_ranks;  ///< increasing
  std::vector<int> stabilizer_orders;          ///< parallel to canonical_ranks
};

PatternCensus steggall_census_serial(const PermutationTable& table);
PatternCensus steggall_census_parallel(const PermutationTable& table);

}  // namespace speckron::kernels
