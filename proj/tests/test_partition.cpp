#include "doctest.h"
#include "oracles.hpp"
#include "speckron/error.hpp"
#include "speckron/partition.hpp"
#include "speckron/permutation.hpp"

using namespace speckron;

TEST_SUITE("partition") {
  TEST_CASE("enumeration size matches the pentagonal recurrence") {
    for (int n = 0; n <= 14; ++n) {
      CHECK(enumerate_partitions(n).size() == oracle::partition_count(n));
    }
  }

  TEST_CASE("reverse-lex order starts at (n) and ends at 1^n") {
    const auto ps = enumerate_partitions(6);
    REQUIRE(ps.size() == 11);
    CHECK(ps.front() == Partition{6});
    CHECK(ps[1] == Partition{5, 1});
    CHECK(ps[2] == Partition{4, 2});
    CHECK(ps.back() == Partition{1, 1, 1, 1, 1, 1});
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
      CHECK(RevLex{}(ps[i], ps[i + 1]));
      CHECK(partition_index(ps[i]) == i);
    }
  }

  TEST_CASE("parse and print round-trip") {
    CHECK(Partition::parse("4,2,2") == Partition{4, 2, 2});
    CHECK(Partition::parse(" 3 , 1 ") == Partition{3, 1});
    CHECK(Partition{4, 2, 2}.to_string() == "4,2,2");
    CHECK_THROWS_AS(Partition::parse("2,3"), ParseError);
    CHECK_THROWS_AS(Partition::parse("4,,2"), ParseError);
    CHECK_THROWS_AS(Partition::parse("a"), ParseError);
    CHECK_THROWS_AS(Partition::parse("2,0"), ParseError);
  }

  TEST_CASE("order, z and multiplicities") {
    CHECK(order_of(Partition{4, 2, 2}) == 4);
    CHECK(order_of(Partition{3, 2}) == 6);
    CHECK(order_of(Partition{1, 1, 1}) == 1);
    CHECK(z_of(Partition{4, 2, 2}) == 4 * 2 * 2 * 2);
    CHECK(z_of(Partition{1, 1, 1, 1}) == 24);
    CHECK(z_of(Partition{3, 3}) == 18);
    const auto m = Partition{4, 2, 2, 1}.multiplicities();
    REQUIRE(m.size() == 3);
    CHECK(m[0] == std::pair{4, 1});
    CHECK(m[1] == std::pair{2, 2});
    CHECK(m[2] == std::pair{1, 1});
  }

  TEST_CASE("power cycle type agrees with powering a permutation") {
    for (int n = 1; n <= 8; ++n) {
      for (const auto& alpha : enumerate_partitions(n)) {
        const auto sigma = standard_permutation(alpha);
        for (std::uint64_t k = 1; k <= 12; ++k) {
          CHECK(power_cycle_type(alpha, k) == sigma.pow(k).cycle_type());
        }
      }
    }
    CHECK(power_cycle_type(Partition{4, 2, 2}, 2) == Partition{2, 2, 1, 1, 1, 1});
  }

  TEST_CASE("z counts centralizer size") {
    for (int n = 1; n <= 6; ++n) {
      const auto perms = oracle::all_permutations(n);
      for (const auto& mu : enumerate_partitions(n)) {
        std::uint64_t cls = 0;
        for (const auto& p : perms)
          if (Permutation::from_one_line(p).cycle_type() == mu) ++cls;
        CHECK(cls * z_of(mu) == perms.size());
      }
    }
  }

  TEST_CASE("dominance, repeat, join, rectangle") {
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
    CHECK_FALSE(dominance_leq(Partition{3, 3}, Partition{4, 1, 1}));
    CHECK_FALSE(dominance_leq(Partition{4, 1, 1}, Partition{3, 3}));
    CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{3}), DomainError);
    CHECK(repeat_parts(Partition{2, 1}, 3) == Partition{2, 2, 2, 1, 1, 1});
    CHECK(join(Partition{3, 1}, Partition{2, 2}) == Partition{3, 2, 2, 1});
    CHECK(rectangle(2, 6) == Partition{2, 2, 2});
    CHECK(rectangle(6, 6) == Partition{6});
    CHECK_THROWS_AS(rectangle(4, 6), DomainError);
  }

  TEST_CASE("invalid construction") {
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), DomainError);
    CHECK_THROWS_AS(Partition(std::vector<int>{-1}), DomainError);
    CHECK(Partition::from_unsorted({1, 3, 2}) == Partition{3, 2, 1});
    CHECK(Partition::from_multiplicities({{2, 2}, {3, 1}}) == Partition{3, 2, 2});
  }
}
