#include "doctest.h"
#include "oracles.hpp"
#include "reference_tables.hpp"
#include "speckron/cycle_index.hpp"
#include "speckron/error.hpp"
#include "speckron/kronecker.hpp"

using namespace speckron;

TEST_SUITE("kronecker") {
  TEST_CASE("power sums are orthogonal idempotents up to z") {
    const auto a = SymFunc::unit(Basis::P, Partition{2, 1});
    const auto b = SymFunc::unit(Basis::P, Partition{1, 1, 1});
    CHECK(kron_p(a, b).is_zero());
    CHECK(kron_p(a, a) == Rational(2) * a);
    CHECK_THROWS_AS(kron_p(a, SymFunc::unit(Basis::P, Partition{2})), DomainError);
  }

  TEST_CASE("h_n is the identity") {
    const auto f = c_to_p(Partition{3, 1});
    CHECK(kronecker(h_to_p(Partition{4}), f) == f);
  }

  TEST_CASE("reference n = 6 tables, algebraic engine") {
    for (const auto& c : reference::kCTables) {
      CAPTURE(c.alpha);
      CAPTURE(c.beta);
      const auto expected = reference::expected_table(Family::C, c);
      CHECK(kron_in_basis(expected.alpha, expected.beta, Family::C) == expected);
    }
    for (const auto& c : reference::kKTables) {
      CAPTURE(c.alpha);
      CAPTURE(c.beta);
      const auto expected = reference::expected_table(Family::K, c);
      CHECK(kron_in_basis(expected.alpha, expected.beta, Family::K) == expected);
    }
  }

  TEST_CASE("reference n = 6 tables, coset engine") {
    for (const auto& c : reference::kCTables) {
      const auto expected = reference::expected_table(Family::C, c);
      CHECK(kron_by_cosets(expected.alpha, expected.beta, Family::C) == expected);
    }
    for (const auto& c : reference::kKTables) {
      const auto expected = reference::expected_table(Family::K, c);
      CHECK(kron_by_cosets(expected.alpha, expected.beta, Family::K) == expected);
    }
  }

  TEST_CASE("h-basis products and contingency tables") {
    for (const auto& c : reference::kHTables) {
      const auto expected = reference::expected_table(Family::E, c);
      CHECK(kron_in_basis(expected.alpha, expected.beta, Family::E) == expected);
      for (const auto& [mu, v] : expected.entries) CHECK(nm_count(expected.alpha, expected.beta, mu) == v);
    }
  }

  TEST_CASE("contingency enumeration agrees with unrestricted search") {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& a : enumerate_partitions(n)) {
        for (const auto& b : enumerate_partitions(n)) {
          const auto fast = nm_matrices(a, b);
          const auto slow = oracle::contingency_tables(a.parts(), b.parts());
          CHECK(fast == slow);
        }
      }
    }
    CHECK(matrix_type({{2, 0}, {1, 1}}) == Partition{2, 1, 1});
  }

  TEST_CASE("coset totals equal the structure count of the product") {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& a : enumerate_partitions(n)) {
        for (const auto& b : enumerate_partitions(n)) {
          for (Family fam : {Family::E, Family::C, Family::K}) {
            const auto cs = classified_double_cosets(a, b, fam, Execution::Serial);
            const auto H = family_subgroup(fam, a);
            const auto K = family_subgroup(fam, b);
            std::uint64_t total = 0;
            for (const auto& c : cs) {
              CHECK(c.size * c.intersection_order == H.size() * K.size());
              CHECK(c.intersection_order == family_subgroup(fam, c.intersection_type).size());
              total += c.size;
            }
            CHECK(total == static_cast<std::uint64_t>(factorial(n).get_ui()));
          }
        }
      }
    }
  }

  TEST_CASE("engines agree for n <= 5") {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& a : enumerate_partitions(n)) {
        for (const auto& b : enumerate_partitions(n)) {
          for (Family fam : {Family::E, Family::C, Family::K}) {
            CHECK(kron_by_cosets(a, b, fam, Execution::Serial) == kron_in_basis(a, b, fam));
          }
        }
      }
    }
  }

  TEST_CASE("theta matrix of the identity") {
    const auto z = theta_matrix(Permutation::identity(4), Partition{2, 2}, Partition{3, 1});
    CHECK(z == IntMatrix{{2, 0}, {1, 1}});
  }

  TEST_CASE("family tags") {
    CHECK(parse_family("h") == Family::E);
    CHECK(parse_family("E") == Family::E);
    CHECK(parse_family("k") == Family::K);
    CHECK_THROWS_AS(parse_family("x"), ParseError);
    CHECK(family_basis(Family::E) == Basis::H);
  }

  TEST_CASE("coset engine capacity") {
    CHECK_THROWS_AS(kron_by_cosets(Partition{10}, Partition{10}, Family::C), CapacityError);
  }
}
