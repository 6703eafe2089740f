#include "doctest.h"
#include "speckron/cycle_index.hpp"
#include "speckron/group.hpp"
#include "speckron/symfunc.hpp"

using namespace speckron;

TEST_SUITE("cycle_index") {
  TEST_CASE("displayed p-expansions at (4,2,2)") {
    SymFunc c(Basis::P, 8);
    c.add_term(Partition{1, 1, 1, 1, 1, 1, 1, 1}, Rational(1, 4));
    c.add_term(Partition{2, 2, 1, 1, 1, 1}, Rational(1, 4));
    c.add_term(Partition{4, 2, 2}, Rational(1, 2));
    CHECK(c_to_p(Partition{4, 2, 2}) == c);

    SymFunc k(Basis::P, 8);
    k.add_term(Partition{1, 1, 1, 1, 1, 1, 1, 1}, Rational(1, 8));
    k.add_term(Partition{2, 2, 1, 1, 1, 1}, Rational(1, 4));
    k.add_term(Partition{2, 2, 2, 2}, Rational(1, 8));
    k.add_term(Partition{4, 1, 1, 1, 1}, Rational(1, 4));
    k.add_term(Partition{4, 2, 2}, Rational(1, 4));
    CHECK(k_to_p(Partition{4, 2, 2}) == k);
  }

  TEST_CASE("trivial cases") {
    CHECK(k_to_p(Partition{1, 1, 1}) == SymFunc::unit(Basis::P, Partition{1, 1, 1}));
    CHECK(c_to_p(Partition{1, 1, 1}) == SymFunc::unit(Basis::P, Partition{1, 1, 1}));
    SymFunc h2(Basis::P, 2);
    h2.add_term(Partition{2}, Rational(1, 2));
    h2.add_term(Partition{1, 1}, Rational(1, 2));
    CHECK(h_to_p(Partition{2}) == h2);
  }

  TEST_CASE("closed forms agree with element enumeration") {
    for (int n = 1; n <= 7; ++n) {
      for (const auto& a : enumerate_partitions(n)) {
        CHECK(c_to_p(a) == group_cycle_index(cyclic_group(standard_permutation(a))));
        CHECK(k_to_p(a) == group_cycle_index(product_cyclic_group(a)));
        CHECK(h_to_p(a) == group_cycle_index(young_subgroup(a)));
      }
    }
  }

  TEST_CASE("structure counts") {
    CHECK(count_structures_C(Partition{4, 2}) == 180);
    CHECK(count_structures_K(Partition{4, 2}) == 90);
    CHECK(count_structures_H(Partition{4, 2}) == 15);
    CHECK(count_structures_C(Partition{1, 1, 1, 1, 1, 1}) == 720);
    CHECK(count_structures_C(Partition{12}) == Integer("39916800"));
  }

  TEST_CASE("plethysm with p1^r") {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& a : enumerate_partitions(n)) {
        for (int r = 1; r <= 3; ++r) {
          CHECK(plethysm_p1r(c_to_p(a), r) == c_to_p(repeat_parts(a, r)));
          CHECK(plethysm_p1r(k_to_p(a), r) == k_to_p(repeat_parts(a, r)));
        }
      }
    }
  }
}
