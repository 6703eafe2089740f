#include "speckron/transition.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <mutex>
#include <tuple>

#include <unistd.h>

#include "speckron/character.hpp"
#include "speckron/error.hpp"

namespace speckron {

TransitionMatrix::TransitionMatrix(Basis from, Basis to, int n)
    : from_(from), to_(to), degree_(n), partitions_(enumerate_partitions(n)),
      entries_(partitions_.size() * partitions_.size()) {}

SymFunc TransitionMatrix::apply(const SymFunc& f) const {
  if (f.basis() != from_ || f.degree() != degree_) {
    throw DomainError("transition matrix applied to a function of the wrong basis or degree");
  }
  SymFunc out(to_, degree_);
  for (const auto& [lambda, c] : f.terms()) {
    const std::size_t col = partition_index(lambda);
    for (std::size_t row = 0; row < dimension(); ++row) {
      if (sgn(at(row, col)) != 0) out.add_term(partitions_[row], at(row, col) * c);
    }
  }
  return out;
}

TransitionMatrix TransitionMatrix::inverse() const {
  const std::size_t d = dimension();
  TransitionMatrix inv(to_, from_, degree_);
  std::vector<Rational> work = entries_;
  for (std::size_t i = 0; i < d; ++i) inv.at(i, i) = 1;
  auto w = [&](std::size_t r, std::size_t c) -> Rational& { return work[r * d + c]; };
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && sgn(w(pivot, col)) == 0) ++pivot;
    if (pivot == d) throw ConsistencyError("transition matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < d; ++c) {
        std::swap(w(pivot, c), w(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    const Rational scale = 1 / w(col, col);
    for (std::size_t c = 0; c < d; ++c) {
      w(col, c) *= scale;
      inv.at(col, c) *= scale;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || sgn(w(r, col)) == 0) continue;
      const Rational factor = w(r, col);
      for (std::size_t c = 0; c < d; ++c) {
        if (sgn(w(col, c)) != 0) w(r, c) -= factor * w(col, c);
        if (sgn(inv.at(col, c)) != 0) inv.at(r, c) -= factor * inv.at(col, c);
      }
    }
  }
  return inv;
}

bool TransitionMatrix::is_lower_triangular() const {
  for (std::size_t r = 0; r < dimension(); ++r) {
    for (std::size_t c = r + 1; c < dimension(); ++c) {
      if (sgn(at(r, c)) != 0) return false;
    }
  }
  return true;
}

bool TransitionMatrix::has_nonzero_diagonal() const {
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (sgn(at(i, i)) == 0) return false;
  }
  return true;
}

TransitionMatrix operator*(const TransitionMatrix& second, const TransitionMatrix& first) {
  if (first.to_ != second.from_ || first.degree_ != second.degree_) {
    throw DomainError("transition matrices do not compose");
  }
  const std::size_t d = first.dimension();
  TransitionMatrix out(first.from_, second.to_, first.degree_);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      if (sgn(second.at(r, k)) == 0) continue;
      for (std::size_t c = 0; c < d; ++c) {
        if (sgn(first.at(k, c)) != 0) out.at(r, c) += second.at(r, k) * first.at(k, c);
      }
    }
  }
  return out;
}

namespace {

TransitionMatrix identity_matrix(Basis b, int n) {
  TransitionMatrix m(b, b, n);
  for (std::size_t i = 0; i < m.dimension(); ++i) m.at(i, i) = 1;
  return m;
}

TransitionMatrix p_to_m(int n) {
  TransitionMatrix m(Basis::P, Basis::M, n);
  for (std::size_t c = 0; c < m.dimension(); ++c) {
    for (const auto& [mu, v] : p_to_m_row(m.partitions()[c])) {
      m.at(partition_index(mu), c) = Rational(static_cast<unsigned long>(v));
    }
  }
  return m;
}

TransitionMatrix p_to_s(int n) {
  TransitionMatrix m(Basis::P, Basis::S, n);
  const auto& parts = m.partitions();
  for (std::size_t c = 0; c < m.dimension(); ++c) {
    for (std::size_t r = 0; r < m.dimension(); ++r) m.at(r, c) = Rational(mn_character(parts[r], parts[c]));
  }
  return m;
}

TransitionMatrix unit_columns_to_p(Basis from, int n) {
  TransitionMatrix m(from, Basis::P, n);
  for (std::size_t c = 0; c < m.dimension(); ++c) {
    const SymFunc col = to_p(SymFunc::unit(from, m.partitions()[c]));
    for (const auto& [lambda, v] : col.terms()) m.at(partition_index(lambda), c) = v;
  }
  return m;
}

std::string blob_path(const std::string& dir, Basis from, Basis to, int n) {
  return dir + "/" + std::string(basis_name(from)) + "2" + std::string(basis_name(to)) + "_n" +
         std::to_string(n) + "_v" + std::to_string(kMatrixBlobVersion) + ".bin";
}

}  // namespace

TransitionMatrix build_transition(Basis from, Basis to, int n) {
  if (from == to) return identity_matrix(from, n);
  if (to == Basis::P) {
    if (from == Basis::M) return p_to_m(n).inverse();
    return unit_columns_to_p(from, n);
  }
  if (from == Basis::P) {
    if (to == Basis::M) return p_to_m(n);
    if (to == Basis::S) return p_to_s(n);
    return transition(to, Basis::P, n)->inverse();
  }
  return *transition(Basis::P, to, n) * *transition(from, Basis::P, n);
}

void write_matrix_blob(const TransitionMatrix& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  auto put = [&](std::uint32_t v) { out.write(reinterpret_cast<const char*>(&v), sizeof v); };
  out.write("SKTM", 4);
  put(kMatrixBlobVersion);
  put(static_cast<std::uint32_t>(m.from()));
  put(static_cast<std::uint32_t>(m.to()));
  put(static_cast<std::uint32_t>(m.degree()));
  put(static_cast<std::uint32_t>(m.dimension()));
  for (std::size_t r = 0; r < m.dimension(); ++r) {
    for (std::size_t c = 0; c < m.dimension(); ++c) {
      const std::string s = m.at(r, c).get_str();
      put(static_cast<std::uint32_t>(s.size()));
      out.write(s.data(), static_cast<std::streamsize>(s.size()));
    }
  }
}

std::unique_ptr<TransitionMatrix> read_matrix_blob(const std::string& path, Basis from, Basis to, int n) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return nullptr;
  auto get = [&](std::uint32_t& v) { return static_cast<bool>(in.read(reinterpret_cast<char*>(&v), sizeof v)); };
  char magic[4];
  std::uint32_t version, f, t, deg, dim;
  if (!in.read(magic, 4) || std::memcmp(magic, "SKTM", 4) != 0) return nullptr;
  if (!get(version) || version != kMatrixBlobVersion) return nullptr;
  if (!get(f) || !get(t) || !get(deg) || !get(dim)) return nullptr;
  if (f != static_cast<std::uint32_t>(from) || t != static_cast<std::uint32_t>(to) ||
      deg != static_cast<std::uint32_t>(n)) {
    return nullptr;
  }
  auto m = std::make_unique<TransitionMatrix>(from, to, n);
  if (dim != m->dimension()) return nullptr;
  std::string buf;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      std::uint32_t len;
      if (!get(len) || len > (1u << 20)) return nullptr;
      buf.resize(len);
      if (!in.read(buf.data(), len)) return nullptr;
      try {
        m->at(r, c) = Rational(buf, 10);
      } catch (const std::invalid_argument&) {
        return nullptr;
      }
      m->at(r, c).canonicalize();
    }
  }
  return m;
}

std::shared_ptr<const TransitionMatrix> transition(Basis from, Basis to, int n) {
  using Key = std::tuple<Basis, Basis, int>;
  using Slot = std::shared_future<std::shared_ptr<const TransitionMatrix>>;
  static std::mutex mutex;
  static std::map<Key, Slot> cache;

  std::promise<std::shared_ptr<const TransitionMatrix>> promise;
  Slot slot;
  bool builder = false;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(Key{from, to, n});
    if (it == cache.end()) {
      slot = promise.get_future().share();
      cache.emplace(Key{from, to, n}, slot);
      builder = true;
    } else {
      slot = it->second;
    }
  }
  if (!builder) return slot.get();

  // Readers wait on the shared future, so nobody sees a partially built matrix.
  try {
    const char* dir = std::getenv("SPECKRON_CACHE_DIR");
    std::shared_ptr<const TransitionMatrix> result;
    if (dir && *dir) {
      const std::string path = blob_path(dir, from, to, n);
      if (auto loaded = read_matrix_blob(path, from, to, n)) {
        result = std::move(loaded);
      } else {
        auto built = std::make_shared<const TransitionMatrix>(build_transition(from, to, n));
        try {
          std::filesystem::create_directories(dir);
          const std::string tmp = path + ".tmp" + std::to_string(::getpid());
          write_matrix_blob(*built, tmp);
          std::filesystem::rename(tmp, path);
        } catch (const std::exception&) {
          // an unwritable cache only costs a rebuild next time
        }
        result = std::move(built);
      }
    } else {
      result = std::make_shared<const TransitionMatrix>(build_transition(from, to, n));
    }
    promise.set_value(result);
    return result;
  } catch (...) {
    promise.set_exception(std::current_exception());
    std::lock_guard lock(mutex);
    cache.erase(Key{from, to, n});
    throw;
  }
}

}  // namespace speckron
