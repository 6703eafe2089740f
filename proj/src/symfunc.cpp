#include "speckron/symfunc.hpp"

#include <functional>

#include "speckron/character.hpp"
#include "speckron/cycle_index.hpp"
#include "speckron/error.hpp"
#include "speckron/transition.hpp"

namespace speckron {

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::P: return "p";
    case Basis::H: return "h";
    case Basis::M: return "m";
    case Basis::S: return "s";
    case Basis::C: return "C";
    case Basis::K: return "K";
  }
  return "?";
}

Basis parse_basis(std::string_view text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'p': case 'P': return Basis::P;
      case 'h': case 'H': case 'e': case 'E': return Basis::H;
      case 'm': case 'M': return Basis::M;
      case 's': case 'S': return Basis::S;
      case 'c': case 'C': return Basis::C;
      case 'k': case 'K': return Basis::K;
      default: break;
    }
  }
  throw ParseError("unknown basis '" + std::string(text) + "' (expected one of p h m s C K)");
}

SymFunc SymFunc::unit(Basis basis, const Partition& lambda) {
  SymFunc f(basis, lambda.weight());
  f.add_term(lambda, 1);
  return f;
}

Rational SymFunc::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Rational& c) {
  if (lambda.weight() != degree_) throw DomainError("term weight does not match degree");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void SymFunc::check_compatible(const SymFunc& other) const {
  if (basis_ != other.basis_ || degree_ != other.degree_) {
    throw DomainError("symmetric functions in different bases or degrees");
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  check_compatible(other);
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
  check_compatible(other);
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, coeff] : terms_) coeff *= c;
  return *this;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    if (!first) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += "-";
    first = false;
    Rational a = abs(c);
    if (a != 1) s += format_rational(a) + " ";
    s += std::string(basis_name(basis_)) + "[" + lambda.to_string() + "]";
  }
  return s;
}

namespace {

SymFunc schur_to_p(const Partition& lambda) {
  SymFunc out(Basis::P, lambda.weight());
  for (const auto& mu : enumerate_partitions(lambda.weight())) {
    out.add_term(mu, Rational(mn_character(lambda, mu)) / Rational(z_of(mu)));
  }
  return out;
}

SymFunc unit_to_p(Basis basis, const Partition& lambda) {
  switch (basis) {
    case Basis::P: return SymFunc::unit(Basis::P, lambda);
    case Basis::H: return h_to_p(lambda);
    case Basis::C: return c_to_p(lambda);
    case Basis::K: return k_to_p(lambda);
    case Basis::S: return schur_to_p(lambda);
    case Basis::M: {
      auto m = transition(Basis::M, Basis::P, lambda.weight());
      return m->apply(SymFunc::unit(Basis::M, lambda));
    }
  }
  throw DomainError("unknown basis");
}

}  // namespace

SymFunc to_p(const SymFunc& f) {
  if (f.basis() == Basis::P) return f;
  if (f.basis() == Basis::M) return transition(Basis::M, Basis::P, f.degree())->apply(f);
  SymFunc out(Basis::P, f.degree());
  for (const auto& [lambda, c] : f.terms()) out += unit_to_p(f.basis(), lambda) * c;
  return out;
}

SymFunc from_p(const SymFunc& f, Basis target) {
  if (f.basis() != Basis::P) throw DomainError("from_p expects a p-basis input");
  if (target == Basis::P) return f;
  return transition(Basis::P, target, f.degree())->apply(f);
}

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  return from_p(to_p(f), target);
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  const SymFunc fp = to_p(f);
  const SymFunc gp = to_p(g);
  SymFunc out(Basis::P, f.degree() + g.degree());
  for (const auto& [a, ca] : fp.terms()) {
    for (const auto& [b, cb] : gp.terms()) out.add_term(join(a, b), ca * cb);
  }
  return out;
}

namespace {

// Number of ways to place parts[i..] into bins with the given remaining
// capacities so that every bin ends exactly full.
std::uint64_t fill_bins(const std::vector<int>& parts, std::size_t i, std::vector<int>& room) {
  if (i == parts.size()) {
    for (int r : room) {
      if (r != 0) return 0;
    }
    return 1;
  }
  std::uint64_t total = 0;
  for (auto& r : room) {
    if (r < parts[i]) continue;
    r -= parts[i];
    total += fill_bins(parts, i + 1, room);
    r += parts[i];
  }
  return total;
}

}  // namespace

std::map<Partition, std::uint64_t, RevLex> p_to_m_row(const Partition& lambda) {
  std::map<Partition, std::uint64_t, RevLex> row;
  for (const auto& mu : enumerate_partitions(lambda.weight())) {
    if (mu.length() > lambda.length()) continue;
    std::vector<int> room = mu.parts();
    if (auto c = fill_bins(lambda.parts(), 0, room)) row.emplace(mu, c);
  }
  return row;
}

std::map<Partition, std::uint64_t, RevLex> schur_coeffs_C(const Partition& mu) {
  const std::uint64_t o = order_of(mu);
  std::map<Partition, std::uint64_t, RevLex> out;
  for (const auto& lambda : enumerate_partitions(mu.weight())) {
    Rational sum = 0;
    for (auto k : divisors(o)) {
      sum += Rational(static_cast<long>(euler_phi(k))) * mn_character(lambda, power_cycle_type(mu, o / k));
    }
    sum /= Rational(static_cast<unsigned long>(o));
    if (auto v = to_nonneg_integer(sum, "Schur multiplicity in C")) out.emplace(lambda, v);
  }
  return out;
}

std::map<Partition, std::uint64_t, RevLex> schur_coeffs_K(const Partition& mu) {
  const auto mults = mu.multiplicities();
  // Every divisor tuple (k_1, ..., k_m), k_j | i_j, contributes
  // prod phi(k_j) chi^lambda(V), V the union of (i_j^{m_j}) powered by i_j/k_j.
  std::vector<std::pair<Partition, Rational>> classes;
  std::function<void(std::size_t, Partition, Rational)> expand = [&](std::size_t j, Partition acc,
                                                                     Rational weight) {
    if (j == mults.size()) {
      classes.emplace_back(std::move(acc), std::move(weight));
      return;
    }
    auto [part, mult] = mults[j];
    const auto i = static_cast<std::uint64_t>(part);
    const Partition block = rectangle(part, part * mult);
    for (auto k : divisors(i)) {
      expand(j + 1, join(acc, power_cycle_type(block, i / k)),
             weight * ratio(static_cast<long>(euler_phi(k)), i));
    }
  };
  expand(0, Partition(), Rational(1));

  std::map<Partition, std::uint64_t, RevLex> out;
  for (const auto& lambda : enumerate_partitions(mu.weight())) {
    Rational sum = 0;
    for (const auto& [cls, w] : classes) sum += w * mn_character(lambda, cls);
    if (auto v = to_nonneg_integer(sum, "Schur multiplicity in K")) out.emplace(lambda, v);
  }
  return out;
}

std::uint64_t kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw DomainError("kostka: unequal weights");
  return to_nonneg_integer(transition(Basis::H, Basis::S, mu.weight())->at(lambda, mu), "Kostka number");
}

}  // namespace speckron
