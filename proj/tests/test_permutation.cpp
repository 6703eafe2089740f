#include "doctest.h"
#include "oracles.hpp"
#include "speckron/error.hpp"
#include "speckron/permutation.hpp"

using namespace speckron;

TEST_SUITE("permutation") {
  TEST_CASE("notations round-trip") {
    const auto p = Permutation::parse_one_line("3 1 2");
    CHECK(p(1) == 3);
    CHECK(p(2) == 1);
    CHECK(p.to_one_line_string() == "3 1 2");
    CHECK(p.to_cycle_string() == "(1 3 2)");
    CHECK(Permutation::parse_cycles("(1 3 2)", 3) == p);
    CHECK(Permutation::identity(4).to_cycle_string() == "()");
    CHECK(Permutation::parse_cycles("()", 4) == Permutation::identity(4));
    for (const auto& v : oracle::all_permutations(5)) {
      const auto q = Permutation::from_one_line(v);
      CHECK(Permutation::parse_one_line(q.to_one_line_string()) == q);
      CHECK(Permutation::parse_cycles(q.to_cycle_string(), 5) == q);
    }
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(Permutation::parse_one_line("1 1 2"), ParseError);
    CHECK_THROWS_AS(Permutation::parse_one_line("1 x"), ParseError);
    CHECK_THROWS_AS(Permutation::parse_cycles("(1 2", 3), ParseError);
    CHECK_THROWS_AS(Permutation::parse_cycles("(1 4)", 3), ParseError);
    CHECK_THROWS_AS(Permutation::parse_cycles("(1 2)(2 3)", 3), ParseError);
  }

  TEST_CASE("composition applies the right factor first") {
    const auto a = Permutation::parse_cycles("(1 2)", 3);
    const auto b = Permutation::parse_cycles("(2 3)", 3);
    CHECK((a * b)(2) == a(b(2)));
    CHECK((a * b)(3) == 1);
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
  }

  TEST_CASE("order, powers, cycle type") {
    const auto s = standard_permutation(Partition{4, 2, 2});
    CHECK(s.to_cycle_string() == "(1 2 3 4)(5 6)(7 8)");
    CHECK(s.order() == 4);
    CHECK(s.pow(4).is_identity());
    CHECK_FALSE(s.pow(2).is_identity());
    CHECK(s.cycle_type() == Partition{4, 2, 2});
    for (const auto& v : oracle::all_permutations(5)) {
      const auto q = Permutation::from_one_line(v);
      CHECK(q.pow(q.order()).is_identity());
      CHECK((q * q.inverse()).is_identity());
      CHECK(q.cycle_type().weight() == 5);
    }
  }
}
