#include "speckron/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_set>

#include "speckron/cycle_index.hpp"
#include "speckron/error.hpp"
#include "speckron/kernels.hpp"

namespace speckron {

namespace {

std::vector<Permutation> closure(int n, const std::vector<Permutation>& generators) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(n);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation y = g * x;
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ElementGroup ElementGroup::generated_by(int n, std::vector<Permutation> generators, GroupKind kind,
                                        Partition shape) {
  for (const auto& g : generators) {
    if (g.degree() != n) throw DomainError("generator degree does not match group degree");
  }
  ElementGroup G;
  G.degree_ = n;
  G.elements_ = closure(n, generators);
  std::erase_if(generators, [](const Permutation& g) { return g.is_identity(); });
  G.generators_ = std::move(generators);
  G.kind_ = kind;
  G.shape_ = std::move(shape);
  return G;
}

ElementGroup ElementGroup::from_elements(int n, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const auto& e : elements) {
    if (e.degree() != n) throw DomainError("element degree does not match group degree");
  }
  // Greedy generating set: every element missing from the current closure
  // becomes a generator. The set is a group iff the final closure equals it.
  std::vector<Permutation> gens;
  std::vector<Permutation> current{Permutation::identity(n)};
  for (const auto& e : elements) {
    if (std::binary_search(current.begin(), current.end(), e)) continue;
    gens.push_back(e);
    current = closure(n, gens);
  }
  if (current != elements) throw DomainError("element set is not a group");
  ElementGroup G;
  G.degree_ = n;
  G.elements_ = std::move(elements);
  G.generators_ = std::move(gens);
  return G;
}

bool ElementGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool ElementGroup::is_group() const {
  if (!contains(Permutation::identity(degree_))) return false;
  for (const auto& a : elements_) {
    if (!contains(a.inverse())) return false;
    for (const auto& b : elements_) {
      if (!contains(a * b)) return false;
    }
  }
  return true;
}

ElementGroup cyclic_group(const Permutation& sigma) {
  return ElementGroup::generated_by(sigma.degree(), {sigma}, GroupKind::Cyclic, sigma.cycle_type());
}

ElementGroup young_subgroup(const Partition& alpha) {
  const int n = alpha.weight();
  if (n > kMaxCosetDegree) {
    throw CapacityError("Young subgroup enumeration is limited to n <= " +
                        std::to_string(kMaxCosetDegree));
  }
  std::vector<std::pair<int, int>> blocks;  // [begin, end)
  int start = 0;
  for (int part : alpha.parts()) {
    blocks.emplace_back(start, start + part);
    start += part;
  }

  std::vector<Permutation> elements;
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  // Odometer over the blocks, each block cycling through its permutations.
  while (true) {
    elements.push_back(Permutation::from_one_line(images));
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto first = images.begin() + blocks[b].first;
      auto last = images.begin() + blocks[b].second;
      if (std::next_permutation(first, last)) break;
    }
    if (b == blocks.size()) break;
  }
  std::sort(elements.begin(), elements.end());

  std::vector<Permutation> gens;
  for (auto [lo, hi] : blocks) {
    for (int i = lo + 1; i < hi; ++i) gens.push_back(Permutation::from_cycles({{i, i + 1}}, n));
  }

  ElementGroup G;
  G.degree_ = n;
  G.elements_ = std::move(elements);
  G.generators_ = std::move(gens);
  G.kind_ = GroupKind::Young;
  G.shape_ = alpha;
  return G;
}

ElementGroup product_cyclic_group(const Partition& alpha) {
  const int n = alpha.weight();
  std::vector<Permutation> gens;
  int next = 1;
  for (auto [part, mult] : alpha.multiplicities()) {
    std::vector<std::vector<int>> cycles;
    for (int c = 0; c < mult; ++c) {
      std::vector<int> cycle;
      for (int j = 0; j < part; ++j) cycle.push_back(next++);
      cycles.push_back(std::move(cycle));
    }
    gens.push_back(Permutation::from_cycles(cycles, n));
  }
  return ElementGroup::generated_by(n, std::move(gens), GroupKind::ProductCyclic, alpha);
}

ElementGroup conjugate(const ElementGroup& H, const Permutation& pi) {
  const Permutation inv = pi.inverse();
  std::vector<Permutation> gens;
  for (const auto& g : H.generators()) gens.push_back(pi * g * inv);
  return ElementGroup::generated_by(H.degree(), std::move(gens), H.kind(), H.shape());
}

ElementGroup intersect_conjugate(const ElementGroup& H, const Permutation& pi, const ElementGroup& K) {
  if (H.degree() != K.degree() || pi.degree() != H.degree()) {
    throw DomainError("intersect_conjugate: degrees differ");
  }
  const Permutation inv = pi.inverse();
  std::vector<Permutation> kept;
  for (const auto& h : H.elements()) {
    if (K.contains(inv * h * pi)) kept.push_back(h);
  }
  return ElementGroup::from_elements(H.degree(), std::move(kept));
}

Partition classify_cyclic(const ElementGroup& C) {
  for (const auto& g : C.elements()) {
    if (g.order() == C.size()) return g.cycle_type();
  }
  throw ConsistencyError("classify_cyclic: group of order " + std::to_string(C.size()) +
                         " is not cyclic");
}

namespace {

struct KIndexTable {
  std::vector<std::pair<SymFunc, Partition>> entries;
};

std::shared_ptr<const KIndexTable> k_index_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const KIndexTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    auto t = std::make_shared<KIndexTable>();
    for (const auto& mu : enumerate_partitions(n)) t->entries.emplace_back(k_to_p(mu), mu);
    slot = std::move(t);
  }
  return slot;
}

}  // namespace

Partition classify_product_cyclic(const ElementGroup& H) {
  const SymFunc z = group_cycle_index(H);
  for (const auto& [series, mu] : k_index_table(H.degree())->entries) {
    if (series == z) return mu;
  }
  throw ConsistencyError("classify_product_cyclic: no K_mu has cycle index " + z.to_string());
}

SymFunc group_cycle_index(const ElementGroup& H) {
  std::map<Partition, std::uint64_t> counts;
  for (const auto& h : H.elements()) ++counts[h.cycle_type()];
  SymFunc z(Basis::P, H.degree());
  const Rational order(static_cast<unsigned long>(H.size()));
  for (const auto& [lambda, c] : counts) z.add_term(lambda, Rational(static_cast<unsigned long>(c)) / order);
  return z;
}

std::vector<DoubleCoset> double_cosets(const ElementGroup& H, const ElementGroup& K, Execution exec) {
  if (H.degree() != K.degree()) throw DomainError("double_cosets: degrees differ");
  const int n = H.degree();
  if (n > kMaxCosetDegree) {
    throw CapacityError("double coset enumeration is limited to n <= " + std::to_string(kMaxCosetDegree));
  }
  auto table = kernels::permutation_table(n);
  const auto labels = exec == Execution::Serial
                          ? kernels::coset_labels_serial(*table, H.generators(), K.generators())
                          : kernels::coset_labels_parallel(*table, H.generators(), K.generators());
  std::vector<std::uint64_t> sizes(labels.size(), 0);
  for (auto l : labels) ++sizes[l];
  std::vector<DoubleCoset> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == i) out.push_back({table->permutation(i), sizes[i]});
  }
  return out;
}

}  // namespace speckron
