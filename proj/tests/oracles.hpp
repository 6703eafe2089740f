// Independent brute-force references used to check the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "speckron/numeric.hpp"
#include "speckron/partition.hpp"
#include "speckron/permutation.hpp"

namespace oracle {

using speckron::Integer;
using speckron::Partition;
using speckron::Permutation;
using speckron::Rational;

// p(n) by the pentagonal-number recurrence.
inline std::uint64_t partition_count(int n) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::int64_t s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const int sign = (k % 2) ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) s += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = s;
  }
  return static_cast<std::uint64_t>(p[static_cast<std::size_t>(n)]);
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Sparse polynomials in a fixed number of variables, exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, Integer>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Poly power_sum_poly(int k, int vars) {
  Poly p;
  for (int i = 0; i < vars; ++i) {
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(i)] = k;
    p[e] = 1;
  }
  return p;
}

inline Poly p_lambda_poly(const Partition& lambda, int vars) {
  Poly out{{std::vector<int>(static_cast<std::size_t>(vars), 0), Integer(1)}};
  for (int part : lambda.parts()) out = poly_mul(out, power_sum_poly(part, vars));
  return out;
}

// Coefficient of m_mu in p_lambda: coefficient of x^mu in the expanded polynomial.
inline Integer p_to_m_coefficient(const Partition& lambda, const Partition& mu) {
  const int vars = static_cast<int>(mu.length());
  const auto poly = p_lambda_poly(lambda, vars);
  auto it = poly.find(mu.parts());
  return it == poly.end() ? Integer(0) : it->second;
}

// Frobenius formula: chi^lambda(mu) is the coefficient of x^{lambda + delta}
// in a_delta * p_mu, with l = n variables.
inline Integer frobenius_character(const Partition& lambda, const Partition& mu) {
  const int l = lambda.weight();
  Poly vandermonde;
  for (const auto& perm : all_permutations(l)) {
    std::vector<int> e(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) e[static_cast<std::size_t>(i)] = l - perm[static_cast<std::size_t>(i)];
    int inversions = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    vandermonde[e] = inversions % 2 ? -1 : 1;
  }
  const auto product = poly_mul(vandermonde, p_lambda_poly(mu, l));
  std::vector<int> target(static_cast<std::size_t>(l), 0);
  for (int i = 0; i < l; ++i) {
    const int part = i < static_cast<int>(lambda.length()) ? lambda[static_cast<std::size_t>(i)] : 0;
    target[static_cast<std::size_t>(i)] = part + l - 1 - i;
  }
  auto it = product.find(target);
  return it == product.end() ? Integer(0) : it->second;
}

// Semistandard tableaux of shape lambda and content mu.
inline std::uint64_t ssyt_count(const Partition& lambda, const Partition& mu) {
  const std::size_t rows = lambda.length();
  std::vector<std::vector<int>> t(rows);
  for (std::size_t r = 0; r < rows; ++r) t[r].assign(static_cast<std::size_t>(lambda[r]), 0);
  std::vector<int> remaining = mu.parts();
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < t[r].size(); ++c) cells.emplace_back(r, c);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[idx];
    for (int v = 1; v <= static_cast<int>(remaining.size()); ++v) {
      if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (c > 0 && t[r][c - 1] > v) continue;
      if (r > 0 && t[r - 1][c] >= v) continue;
      t[r][c] = v;
      --remaining[static_cast<std::size_t>(v - 1)];
      fill(idx + 1);
      ++remaining[static_cast<std::size_t>(v - 1)];
    }
  };
  fill(0);
  return count;
}

// Double cosets H g K of S_n by explicit orbit sets.
inline std::vector<std::set<std::vector<int>>> double_coset_sets(const std::vector<Permutation>& H,
                                                                 const std::vector<Permutation>& K, int n) {
  std::set<std::vector<int>> seen;
  std::vector<std::set<std::vector<int>>> out;
  for (const auto& g : all_permutations(n)) {
    if (seen.count(g)) continue;
    std::set<std::vector<int>> coset;
    const auto gp = Permutation::from_one_line(g);
    for (const auto& h : H)
      for (const auto& k : K) coset.insert((h * gp * k).one_line());
    seen.insert(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

// Burnside count of H x K orbits on S_n: average number of g with h g k^-1 = g.
inline Rational burnside_double_coset_count(const std::vector<Permutation>& H, const std::vector<Permutation>& K,
                                            int n) {
  Integer fixed = 0;
  const auto perms = all_permutations(n);
  for (const auto& h : H) {
    for (const auto& k : K) {
      const auto kinv = k.inverse();
      for (const auto& g : perms) {
        const auto gp = Permutation::from_one_line(g);
        if (h * gp * kinv == gp) ++fixed;
      }
    }
  }
  Rational r(fixed, Integer(static_cast<unsigned long>(H.size() * K.size())));
  r.canonicalize();
  return r;
}

// All nonnegative integer matrices with the given row and column sums,
// by unrestricted cell-wise search.
inline std::vector<std::vector<std::vector<int>>> contingency_tables(const std::vector<int>& rows,
                                                                     const std::vector<int>& cols) {
  const std::size_t R = rows.size(), C = cols.size();
  std::vector<std::vector<int>> m(R, std::vector<int>(C, 0));
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> rowleft = rows, colleft = cols;
  std::function<void(std::size_t)> go = [&](std::size_t cell) {
    if (cell == R * C) {
      if (std::all_of(rowleft.begin(), rowleft.end(), [](int v) { return v == 0; }) &&
          std::all_of(colleft.begin(), colleft.end(), [](int v) { return v == 0; }))
        out.push_back(m);
      return;
    }
    const std::size_t r = cell / C, c = cell % C;
    for (int v = 0; v <= std::min(rowleft[r], colleft[c]); ++v) {
      m[r][c] = v;
      rowleft[r] -= v;
      colleft[c] -= v;
      go(cell + 1);
      rowleft[r] += v;
      colleft[c] += v;
    }
    m[r][c] = 0;
  };
  go(0);
  return out;
}

}  // namespace oracle
