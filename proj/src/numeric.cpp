#include "speckron/numeric.hpp"

#include <limits>
#include <numeric>

#include "speckron/error.hpp"

namespace speckron {

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational ratio(long num, unsigned long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::uint64_t euler_phi(std::uint64_t k) {
  std::uint64_t result = k;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t k) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= k; ++d) {
    if (k % d != 0) continue;
    small.push_back(d);
    if (d != k / d) large.push_back(k / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::uint64_t to_nonneg_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1 || sgn(q) < 0 || !q.get_num().fits_ulong_p()) {
    throw ConsistencyError(std::string(what) + ": expected a nonnegative integer, got " +
                           format_rational(q));
  }
  return q.get_num().get_ui();
}

}  // namespace speckron
