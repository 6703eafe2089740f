#include "speckron/steggall.hpp"

#include "speckron/error.hpp"
#include "speckron/group.hpp"
#include "speckron/kernels.hpp"
#include "speckron/kronecker.hpp"
#include "speckron/numeric.hpp"

namespace speckron {

Permutation torus_act(const Permutation& P, int r, int k) {
  const int n = P.degree();
  if (n == 0) return P;
  r = ((r % n) + n) % n;
  k = ((k % n) + n) % n;
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int v = P((i + r) % n + 1);
    images[static_cast<std::size_t>(i)] = (v - 1 + k) % n + 1;
  }
  return Permutation::from_one_line(images);
}

int torus_stabilizer_order(const Permutation& P) {
  const int n = P.degree();
  int count = 0;
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      if (torus_act(P, r, k) == P) ++count;
    }
  }
  return count;
}

std::vector<SteggallPattern> enumerate_patterns(int n, Execution exec) {
  if (n < 1) throw DomainError("patterns need n >= 1");
  if (n > kMaxPatternDegree) {
    throw CapacityError("pattern enumeration is limited to n <= " + std::to_string(kMaxPatternDegree));
  }
  auto table = kernels::permutation_table(n);
  const auto census = exec == Execution::Serial ? kernels::steggall_census_serial(*table)
                                                : kernels::steggall_census_parallel(*table);
  std::vector<SteggallPattern> out;
  out.reserve(census.canonical_ranks.size());
  const auto square = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  for (std::size_t i = 0; i < census.canonical_ranks.size(); ++i) {
    const int d = census.stabilizer_orders[i];
    out.push_back({table->permutation(census.canonical_ranks[i]), square / static_cast<std::uint64_t>(d), d});
  }
  return out;
}

std::map<int, std::uint64_t> counts_by_stabilizer(int n, Execution exec) {
  std::map<int, std::uint64_t> counts;
  for (const auto& p : enumerate_patterns(n, exec)) ++counts[p.stabilizer_order];
  return counts;
}

bool SteggallIdentityReport::passed() const {
  std::uint64_t sum = 0;
  for (const auto& c : checks) {
    if (!c.ok()) return false;
    sum += c.patterns;
  }
  return stray_coefficients.empty() && sum == total_patterns;
}

SteggallIdentityReport verify_steggall_identity(int n, Execution exec) {
  const auto patterns = enumerate_patterns(n, exec);
  std::map<int, std::uint64_t> by_stab;
  for (const auto& p : patterns) ++by_stab[p.stabilizer_order];

  const Partition cycle{n};
  const auto algebraic = kron_in_basis(cycle, cycle, Family::C);
  const auto cosets = kron_by_cosets(cycle, cycle, Family::C, exec);

  SteggallIdentityReport report{n, patterns.size(), {}, {}};
  auto lookup = [](const StructureConstantTable& t, const Partition& mu) -> std::uint64_t {
    auto it = t.entries.find(mu);
    return it == t.entries.end() ? 0 : it->second;
  };
  for (auto d64 : divisors(static_cast<std::uint64_t>(n))) {
    const int d = static_cast<int>(d64);
    const Partition mu = rectangle(d, n);
    auto it = by_stab.find(d);
    report.checks.push_back({d, mu, it == by_stab.end() ? 0 : it->second, lookup(algebraic, mu), lookup(cosets, mu)});
  }
  for (const auto* table : {&algebraic, &cosets}) {
    for (const auto& [mu, v] : table->entries) {
      const bool rectangular = mu.multiplicities().size() == 1;
      if (!rectangular && v != 0) report.stray_coefficients[mu] = v;
    }
  }
  return report;
}

}  // namespace speckron
