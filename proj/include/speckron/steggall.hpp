#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "speckron/execution.hpp"
#include "speckron/partition.hpp"
#include "speckron/permutation.hpp"

namespace speckron {

inline constexpr int kMaxPatternDegree = 10;

/// Q_i = P_{i+r} + k, indices and values taken mod n in 1..n.
Permutation torus_act(const Permutation& P, int r, int k);

/// Number of (r, k) in Z_n x Z_n with torus_act(P, r, k) == P.
int torus_stabilizer_order(const Permutation& P);

struct SteggallPattern {
  Permutation canonical;  ///< lexicographically least element of the orbit
  std::uint64_t orbit_size;
  int stabilizer_order;
};

/// One entry per torus orbit on S_n, ordered by canonical representative.
/// Throws CapacityError above kMaxPatternDegree.
std::vector<SteggallPattern> enumerate_patterns(int n, Execution exec = Execution::Parallel);

/// Pattern count per stabilizer order; keys are divisors of n.
std::map<int, std::uint64_t> counts_by_stabilizer(int n, Execution exec = Execution::Parallel);

struct DivisorCheck {
  int d;
  Partition mu;                  ///< (d^{n/d})
  std::uint64_t patterns;        ///< patterns with stabilizer order d
  std::uint64_t algebraic;       ///< b_{n,n}^mu by the algebraic engine
  std::uint64_t cosets;          ///< b_{n,n}^mu by the coset engine
  bool ok() const { return patterns == algebraic && patterns == cosets; }
};

struct SteggallIdentityReport {
  int n;
  std::uint64_t total_patterns;
  std::vector<DivisorCheck> checks;
  /// Non-rectangular mu with b_{n,n}^mu != 0 (must stay empty).
  std::map<Partition, std::uint64_t, RevLex> stray_coefficients;
  bool passed() const;
};

/// Compares the stabilizer histogram of patterns with the structure
/// constants of C_n * C_n. Mismatches are reported, not thrown.
SteggallIdentityReport verify_steggall_identity(int n, Execution exec = Execution::Parallel);

}  // namespace speckron
