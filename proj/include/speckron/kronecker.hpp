#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "speckron/execution.hpp"
#include "speckron/group.hpp"
#include "speckron/partition.hpp"
#include "speckron/symfunc.hpp"

namespace speckron {

/// Molecule families closed under the Kronecker product: set molecules E
/// (h-basis), cyclic molecules of the first kind C and of the second kind K.
enum class Family { E, C, K };

std::string_view family_name(Family f);
/// Accepts E/H, C, K in either case.
Family parse_family(std::string_view text);
Basis family_basis(Family f);

/// Structure constants of family(alpha) * family(beta) in the same family.
struct StructureConstantTable {
  Family family;
  Partition alpha;
  Partition beta;
  std::map<Partition, std::uint64_t, RevLex> entries;  ///< nonzero only

  std::uint64_t total() const;
  friend bool operator==(const StructureConstantTable&, const StructureConstantTable&) = default;
};

/// p_lambda * p_mu = delta z_lambda p_lambda, extended bilinearly.
SymFunc kron_p(const SymFunc& f, const SymFunc& g);

/// Kronecker product of any two equal-degree functions, expressed in f's basis.
SymFunc kronecker(const SymFunc& f, const SymFunc& g);

/// Algebraic engine: through the p-basis and back. Throws ConsistencyError
/// on any fractional or negative coefficient.
StructureConstantTable kron_in_basis(const Partition& alpha, const Partition& beta, Family family);

/// S_alpha, <sigma_alpha> or G_alpha.
ElementGroup family_subgroup(Family family, const Partition& alpha);

struct ClassifiedCoset {
  Permutation representative;
  std::uint64_t size;
  Partition intersection_type;       ///< mu with H cap tau K tau^-1 ~ family subgroup of mu
  std::uint64_t intersection_order;  ///< |H cap tau K tau^-1|
};

/// Double cosets of the family subgroups with each stabilizer intersection
/// classified.
std::vector<ClassifiedCoset> classified_double_cosets(const Partition& alpha, const Partition& beta,
                                                      Family family,
                                                      Execution exec = Execution::Parallel);

/// Coset engine: tally of classified_double_cosets by intersection type.
StructureConstantTable kron_by_cosets(const Partition& alpha, const Partition& beta, Family family,
                                      Execution exec = Execution::Parallel);

using IntMatrix = std::vector<std::vector<int>>;

/// Nonnegative integer matrices with row sums alpha and column sums beta,
/// in row-major lexicographic order.
std::vector<IntMatrix> nm_matrices(const Partition& alpha, const Partition& beta);

/// Nonzero entries sorted decreasingly.
Partition matrix_type(const IntMatrix& m);

/// Number of nm_matrices(alpha, beta) of type mu.
std::uint64_t nm_count(const Partition& alpha, const Partition& beta, const Partition& mu);

/// z_ij = |block_i(alpha) cap tau(block_j(beta))| over the consecutive
/// standard blocks.
IntMatrix theta_matrix(const Permutation& tau, const Partition& alpha, const Partition& beta);

}  // namespace speckron
