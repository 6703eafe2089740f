#pragma once

#include <memory>
#include <vector>

#include "speckron/numeric.hpp"
#include "speckron/partition.hpp"
#include "speckron/symfunc.hpp"

namespace speckron {

/// Square change-of-basis matrix on degree-n symmetric functions. Column j
/// holds the expansion of the j-th source basis element in the target
/// basis; rows and columns follow enumerate_partitions(n).
class TransitionMatrix {
 public:
  TransitionMatrix(Basis from, Basis to, int n);

  Basis from() const { return from_; }
  Basis to() const { return to_; }
  int degree() const { return degree_; }
  std::size_t dimension() const { return partitions_.size(); }
  const std::vector<Partition>& partitions() const { return partitions_; }

  const Rational& at(std::size_t row, std::size_t col) const { return entries_[row * dimension() + col]; }
  Rational& at(std::size_t row, std::size_t col) { return entries_[row * dimension() + col]; }
  const Rational& at(const Partition& row, const Partition& col) const {
    return at(partition_index(row), partition_index(col));
  }

  /// f must be in from(); result is in to().
  SymFunc apply(const SymFunc& f) const;

  /// Exact inverse by Gauss-Jordan elimination; from/to swap. Throws
  /// ConsistencyError if singular.
  TransitionMatrix inverse() const;

  /// True when every entry above the diagonal is zero.
  bool is_lower_triangular() const;
  bool has_nonzero_diagonal() const;

  /// second(B->C) * first(A->B) = (A->C).
  friend TransitionMatrix operator*(const TransitionMatrix& second, const TransitionMatrix& first);
  friend bool operator==(const TransitionMatrix& a, const TransitionMatrix& b) {
    return a.from_ == b.from_ && a.to_ == b.to_ && a.degree_ == b.degree_ && a.entries_ == b.entries_;
  }

 private:
  Basis from_;
  Basis to_;
  int degree_;
  std::vector<Partition> partitions_;
  std::vector<Rational> entries_;
};

/// Cached, lazily built transition matrix. Each (from, to, n) is built at
/// most once even under concurrent callers. When SPECKRON_CACHE_DIR is set,
/// matrices are also loaded from and stored to that directory.
std::shared_ptr<const TransitionMatrix> transition(Basis from, Basis to, int n);

/// Builds the matrix without consulting or filling any cache.
TransitionMatrix build_transition(Basis from, Basis to, int n);

/// Versioned binary blob used by the on-disk cache.
void write_matrix_blob(const TransitionMatrix& m, const std::string& path);
/// Returns nullptr when the file is missing or has a different version.
std::unique_ptr<TransitionMatrix> read_matrix_blob(const std::string& path, Basis from, Basis to, int n);

inline constexpr std::uint32_t kMatrixBlobVersion = 1;

}  // namespace speckron
