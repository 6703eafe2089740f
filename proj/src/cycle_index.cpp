#include "speckron/cycle_index.hpp"

#include "speckron/error.hpp"

namespace speckron {

SymFunc c_to_p(const Partition& alpha) {
  const std::uint64_t o = order_of(alpha);
  SymFunc out(Basis::P, alpha.weight());
  for (auto k : divisors(o)) {
    out.add_term(power_cycle_type(alpha, o / k),
                 ratio(static_cast<long>(euler_phi(k)), o));
  }
  return out;
}

SymFunc k_to_p(const Partition& alpha) {
  SymFunc out = SymFunc::unit(Basis::P, Partition());
  for (auto [part, mult] : alpha.multiplicities()) {
    out = multiply(out, c_to_p(rectangle(part, part * mult)));
  }
  return out;
}

SymFunc h_to_p(const Partition& alpha) {
  SymFunc out = SymFunc::unit(Basis::P, Partition());
  for (int a : alpha.parts()) {
    SymFunc h(Basis::P, a);
    for (const auto& nu : enumerate_partitions(a)) h.add_term(nu, ratio(1, z_of(nu)));
    out = multiply(out, h);
  }
  return out;
}

Integer count_structures_C(const Partition& mu) {
  return factorial(mu.weight()) / Integer(static_cast<unsigned long>(order_of(mu)));
}

Integer count_structures_K(const Partition& mu) {
  Integer denom = 1;
  for (auto [part, mult] : mu.multiplicities()) denom *= part;
  return factorial(mu.weight()) / denom;
}

Integer count_structures_H(const Partition& mu) {
  Integer denom = 1;
  for (int part : mu.parts()) denom *= factorial(part);
  return factorial(mu.weight()) / denom;
}

SymFunc plethysm_p1r(const SymFunc& f, int r) {
  if (f.basis() != Basis::P) throw DomainError("plethysm_p1r expects a p-basis input");
  SymFunc out(Basis::P, f.degree() * r);
  for (const auto& [lambda, c] : f.terms()) out.add_term(repeat_parts(lambda, r), c);
  return out;
}

}  // namespace speckron
