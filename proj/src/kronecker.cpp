#include "speckron/kronecker.hpp"

#include <algorithm>
#include <functional>

#include "speckron/error.hpp"

namespace speckron {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::E: return "E";
    case Family::C: return "C";
    case Family::K: return "K";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "E" || text == "e" || text == "H" || text == "h") return Family::E;
  if (text == "C" || text == "c") return Family::C;
  if (text == "K" || text == "k") return Family::K;
  throw ParseError("unknown family '" + std::string(text) + "' (expected E, C or K)");
}

Basis family_basis(Family f) {
  switch (f) {
    case Family::E: return Basis::H;
    case Family::C: return Basis::C;
    case Family::K: return Basis::K;
  }
  throw DomainError("unknown family");
}

std::uint64_t StructureConstantTable::total() const {
  std::uint64_t t = 0;
  for (const auto& [mu, v] : entries) t += v;
  return t;
}

SymFunc kron_p(const SymFunc& f, const SymFunc& g) {
  if (f.basis() != Basis::P || g.basis() != Basis::P) throw DomainError("kron_p expects p-basis inputs");
  if (f.degree() != g.degree()) throw DomainError("Kronecker product of different degrees");
  SymFunc out(Basis::P, f.degree());
  for (const auto& [lambda, c] : f.terms()) {
    auto it = g.terms().find(lambda);
    if (it != g.terms().end()) out.add_term(lambda, c * it->second * Rational(z_of(lambda)));
  }
  return out;
}

SymFunc kronecker(const SymFunc& f, const SymFunc& g) {
  return convert(kron_p(to_p(f), to_p(g)), f.basis());
}

StructureConstantTable kron_in_basis(const Partition& alpha, const Partition& beta, Family family) {
  if (alpha.weight() != beta.weight()) throw DomainError("kron_in_basis: unequal weights");
  const Basis b = family_basis(family);
  const SymFunc product = from_p(kron_p(to_p(SymFunc::unit(b, alpha)), to_p(SymFunc::unit(b, beta))), b);
  StructureConstantTable table{family, alpha, beta, {}};
  for (const auto& [mu, c] : product.terms()) {
    table.entries.emplace(mu, to_nonneg_integer(c, "Kronecker structure constant"));
  }
  return table;
}

ElementGroup family_subgroup(Family family, const Partition& alpha) {
  switch (family) {
    case Family::E: return young_subgroup(alpha);
    case Family::C: return cyclic_group(standard_permutation(alpha));
    case Family::K: return product_cyclic_group(alpha);
  }
  throw DomainError("unknown family");
}

std::vector<ClassifiedCoset> classified_double_cosets(const Partition& alpha, const Partition& beta,
                                                      Family family, Execution exec) {
  if (alpha.weight() != beta.weight()) throw DomainError("double cosets need equal weights");
  const ElementGroup H = family_subgroup(family, alpha);
  const ElementGroup K = family_subgroup(family, beta);
  const auto cosets = double_cosets(H, K, exec);

  std::vector<ClassifiedCoset> out(cosets.size());
  auto classify = [&](std::size_t i) {
    const auto& [tau, size] = cosets[i];
    ClassifiedCoset c{tau, size, Partition(), 0};
    if (family == Family::E) {
      c.intersection_type = matrix_type(theta_matrix(tau, alpha, beta));
      Integer order = 1;
      for (int part : c.intersection_type.parts()) order *= factorial(part);
      c.intersection_order = order.get_ui();
    } else {
      const ElementGroup I = intersect_conjugate(H, tau, K);
      c.intersection_type = family == Family::C ? classify_cyclic(I) : classify_product_cyclic(I);
      c.intersection_order = I.size();
    }
    out[i] = std::move(c);
  };

  const auto count = static_cast<std::int64_t>(cosets.size());
  if (exec == Execution::Parallel) {
    // Exceptions must not escape an OpenMP region; rethrow the first one.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        classify(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::int64_t i = 0; i < count; ++i) classify(static_cast<std::size_t>(i));
  }
  return out;
}

StructureConstantTable kron_by_cosets(const Partition& alpha, const Partition& beta, Family family,
                                      Execution exec) {
  StructureConstantTable table{family, alpha, beta, {}};
  for (const auto& c : classified_double_cosets(alpha, beta, family, exec)) ++table.entries[c.intersection_type];
  return table;
}

std::vector<IntMatrix> nm_matrices(const Partition& alpha, const Partition& beta) {
  if (alpha.weight() != beta.weight()) throw DomainError("nm_matrices: unequal weights");
  const std::size_t rows = alpha.length();
  const std::size_t cols = beta.length();
  std::vector<IntMatrix> out;
  IntMatrix m(rows, std::vector<int>(cols, 0));
  std::vector<int> room = beta.parts();

  // Fill row-major; the last row is forced by the remaining column sums.
  std::function<void(std::size_t, std::size_t, int)> fill = [&](std::size_t r, std::size_t c, int left) {
    if (r + 1 == rows) {
      int sum = 0;
      for (std::size_t j = 0; j < cols; ++j) sum += room[j];
      if (sum != left) return;
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = room[j];
      out.push_back(m);
      return;
    }
    if (c + 1 == cols) {
      if (left > room[c]) return;
      m[r][c] = left;
      room[c] -= left;
      fill(r + 1, 0, alpha[r + 1]);
      room[c] += left;
      return;
    }
    for (int v = 0; v <= std::min(left, room[c]); ++v) {
      m[r][c] = v;
      room[c] -= v;
      fill(r, c + 1, left - v);
      room[c] += v;
    }
  };
  if (rows == 0) {
    out.push_back(m);
  } else {
    fill(0, 0, alpha[0]);
  }
  return out;
}

Partition matrix_type(const IntMatrix& m) {
  std::vector<int> parts;
  for (const auto& row : m) {
    for (int v : row) {
      if (v > 0) parts.push_back(v);
    }
  }
  return Partition::from_unsorted(std::move(parts));
}

std::uint64_t nm_count(const Partition& alpha, const Partition& beta, const Partition& mu) {
  if (mu.weight() != alpha.weight()) throw DomainError("nm_count: unequal weights");
  std::uint64_t count = 0;
  for (const auto& m : nm_matrices(alpha, beta)) {
    if (matrix_type(m) == mu) ++count;
  }
  return count;
}

IntMatrix theta_matrix(const Permutation& tau, const Partition& alpha, const Partition& beta) {
  if (alpha.weight() != beta.weight() || tau.degree() != alpha.weight()) {
    throw DomainError("theta_matrix: degrees differ");
  }
  auto block_of = [](const Partition& shape) {
    std::vector<std::size_t> block;
    for (std::size_t b = 0; b < shape.length(); ++b) block.insert(block.end(), static_cast<std::size_t>(shape[b]), b);
    return block;
  };
  const auto row_block = block_of(alpha);
  const auto col_block = block_of(beta);
  IntMatrix z(alpha.length(), std::vector<int>(beta.length(), 0));
  // Point x of block_j(beta) lands on tau(x), which lies in some block_i(alpha).
  for (int x = 1; x <= tau.degree(); ++x) {
    ++z[row_block[static_cast<std::size_t>(tau(x) - 1)]][col_block[static_cast<std::size_t>(x - 1)]];
  }
  return z;
}

}  // namespace speckron
