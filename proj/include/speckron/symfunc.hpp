#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "speckron/numeric.hpp"
#include "speckron/partition.hpp"

namespace speckron {

/// The six bases of degree-n symmetric functions handled here. H is the
/// complete homogeneous basis, i.e. the cycle indices of the set molecules.
enum class Basis { P, H, M, S, C, K };

inline constexpr Basis kAllBases[] = {Basis::P, Basis::H, Basis::M, Basis::S, Basis::C, Basis::K};

std::string_view basis_name(Basis b);
/// Accepts p/h/m/s/c/k in either case, and e/E as an alias of h.
Basis parse_basis(std::string_view text);

/// A homogeneous symmetric function expanded in one basis. Zero
/// coefficients are never stored; iteration is in reverse-lex order.
class SymFunc {
 public:
  using Terms = std::map<Partition, Rational, RevLex>;

  SymFunc(Basis basis, int degree) : basis_(basis), degree_(degree) {}
  static SymFunc unit(Basis basis, const Partition& lambda);

  Basis basis() const { return basis_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Partition& lambda) const;
  /// Adds c to the coefficient of lambda; lambda must have weight degree().
  void add_term(const Partition& lambda, const Rational& c);

  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const Rational& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
  friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }

  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    return a.basis_ == b.basis_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// "1/4 p[1,1,1,1] + 1/2 p[2,2]"; "0" when empty.
  std::string to_string() const;

 private:
  void check_compatible(const SymFunc& other) const;

  Basis basis_;
  int degree_;
  Terms terms_;
};

/// Expansion in the power-sum basis.
SymFunc to_p(const SymFunc& f);

/// Expansion of a p-basis function in `target`, by the cached P->target
/// transition matrix.
SymFunc from_p(const SymFunc& f, Basis target);

/// Expansion of f in basis `target`, routed through P.
SymFunc convert(const SymFunc& f, Basis target);

/// Ordinary product, in the p-basis. Degrees add.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// Coefficients of p_lambda in the monomial basis, read off as the number
/// of ways to distribute the parts of lambda over the variables of each
/// target monomial. Nonnegative integers.
std::map<Partition, std::uint64_t, RevLex> p_to_m_row(const Partition& lambda);

/// Multiplicities of s_lambda in C_mu, from the character sum over the
/// cyclic group. Throws ConsistencyError if a value is not a nonnegative
/// integer.
std::map<Partition, std::uint64_t, RevLex> schur_coeffs_C(const Partition& mu);

/// Multiplicities of s_lambda in K_mu, from per-part character sums.
std::map<Partition, std::uint64_t, RevLex> schur_coeffs_K(const Partition& mu);

/// Multiplicity of s_lambda in h_mu.
std::uint64_t kostka(const Partition& lambda, const Partition& mu);

}  // namespace speckron
