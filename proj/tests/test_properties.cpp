#include <random>

#include "doctest.h"
#include "speckron/cycle_index.hpp"
#include "speckron/symfunc.hpp"
#include "speckron/transition.hpp"

using namespace speckron;

TEST_SUITE("properties") {
  TEST_CASE("cycle-index matrices are lower triangular with nonzero diagonal") {
    for (int n = 1; n <= 9; ++n) {
      for (Basis b : {Basis::C, Basis::K, Basis::H}) {
        const auto m = transition(b, Basis::P, n);
        CHECK(m->is_lower_triangular());
        CHECK(m->has_nonzero_diagonal());
      }
    }
  }

  TEST_CASE("random round trips through every basis") {
    std::mt19937_64 rng(20240611);
    for (int n = 1; n <= 7; ++n) {
      const auto parts = enumerate_partitions(n);
      std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
      std::uniform_int_distribution<long> num(-9, 9);
      std::uniform_int_distribution<unsigned long> den(1, 6);
      for (int trial = 0; trial < 100; ++trial) {
        SymFunc f(Basis::P, n);
        for (int t = 0; t < 3; ++t) f.add_term(parts[pick(rng)], ratio(num(rng), den(rng)));
        const Basis b = kAllBases[static_cast<std::size_t>(trial) % std::size(kAllBases)];
        CHECK(to_p(from_p(f, b)) == f);
      }
    }
  }

  TEST_CASE("C and K are Schur positive") {
    for (int n = 1; n <= 7; ++n) {
      for (Basis b : {Basis::C, Basis::K}) {
        const auto m = transition(b, Basis::S, n);
        for (std::size_t r = 0; r < m->dimension(); ++r)
          for (std::size_t c = 0; c < m->dimension(); ++c) {
            CHECK(m->at(r, c) >= 0);
            CHECK(m->at(r, c).get_den() == 1);
          }
      }
    }
  }

  TEST_CASE("structure count is the coefficient of m_{1^n}") {
    for (int n = 1; n <= 7; ++n) {
      const Partition ones = repeat_parts(Partition{1}, n);
      for (const auto& mu : enumerate_partitions(n)) {
        const auto m = from_p(c_to_p(mu), Basis::M);
        CHECK(m.coefficient(ones) == Rational(count_structures_C(mu)));
        CHECK(from_p(k_to_p(mu), Basis::M).coefficient(ones) == Rational(count_structures_K(mu)));
      }
    }
  }
}
