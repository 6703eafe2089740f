#pragma once

#include <cstdint>
#include <vector>

#include "speckron/execution.hpp"
#include "speckron/partition.hpp"
#include "speckron/permutation.hpp"
#include "speckron/symfunc.hpp"

namespace speckron {

/// Largest degree for which anything enumerates all of S_n.
inline constexpr int kMaxCosetDegree = 9;

enum class GroupKind { Young, Cyclic, ProductCyclic, Raw };

/// A subgroup of S_n held as its full sorted element list together with a
/// generating set. Immutable after construction.
class ElementGroup {
 public:
  /// Closure of `generators`. Kind and shape are descriptive only.
  static ElementGroup generated_by(int n, std::vector<Permutation> generators,
                                   GroupKind kind = GroupKind::Raw, Partition shape = {});

  /// Wraps an element set that must already be a group (checked); kind Raw.
  static ElementGroup from_elements(int n, std::vector<Permutation> elements);

  int degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  GroupKind kind() const { return kind_; }
  const Partition& shape() const { return shape_; }

  bool contains(const Permutation& p) const;
  /// Closed under composition and inverse, contains the identity.
  bool is_group() const;

 private:
  friend ElementGroup young_subgroup(const Partition& alpha);
  ElementGroup() = default;

  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  GroupKind kind_ = GroupKind::Raw;
  Partition shape_;
};

/// <sigma>, tagged Cyclic with sigma's cycle type.
ElementGroup cyclic_group(const Permutation& sigma);

/// S_alpha preserving the consecutive blocks of alpha. Throws CapacityError
/// above kMaxCosetDegree.
ElementGroup young_subgroup(const Partition& alpha);

/// G_alpha: one cyclic factor per distinct part value, generated by the
/// product of all standard cycles of that length.
ElementGroup product_cyclic_group(const Partition& alpha);

/// pi H pi^{-1}.
ElementGroup conjugate(const ElementGroup& H, const Permutation& pi);

/// H intersected with pi K pi^{-1}, i.e. {h in H : pi^{-1} h pi in K}.
ElementGroup intersect_conjugate(const ElementGroup& H, const Permutation& pi, const ElementGroup& K);

/// Cycle type of a generator of a cyclic group. Throws ConsistencyError if
/// the group is not cyclic.
Partition classify_cyclic(const ElementGroup& C);

/// The unique mu whose K_mu has the same cycle index as H. Throws
/// ConsistencyError if there is none.
Partition classify_product_cyclic(const ElementGroup& H);

/// (1/|H|) sum over h in H of p_{cycle type of h}.
SymFunc group_cycle_index(const ElementGroup& H);

struct DoubleCoset {
  Permutation representative;  ///< lexicographically least element
  std::uint64_t size;
};

/// All double cosets H tau K, ordered by representative. Throws
/// CapacityError above kMaxCosetDegree.
std::vector<DoubleCoset> double_cosets(const ElementGroup& H, const ElementGroup& K,
                                       Execution exec = Execution::Parallel);

}  // namespace speckron
