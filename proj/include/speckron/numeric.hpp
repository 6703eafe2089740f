#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace speckron {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(int n);

/// num/den in lowest terms.
Rational ratio(long num, unsigned long den);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Euler's totient.
std::uint64_t euler_phi(std::uint64_t k);

/// Positive divisors of k in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t k);

/// "num/den", or just "num" when the denominator is 1.
std::string format_rational(const Rational& q);

/// Converts an integral rational to uint64; throws ConsistencyError when the
/// value is fractional, negative or does not fit.
std::uint64_t to_nonneg_integer(const Rational& q, const char* what);

}  // namespace speckron
