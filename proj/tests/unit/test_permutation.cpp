#include <doctest.h>

#include <sstream>

#include "twostack/errors.hpp"
#include "twostack/permutation.hpp"

using namespace twostack;

TEST_SUITE("permutation") {
  TEST_CASE("parses space and comma separated input") {
    CHECK(parse_permutation("3 5 2 4 1") == Permutation{3, 5, 2, 4, 1});
    CHECK(parse_permutation("3,5,2,4,1") == Permutation{3, 5, 2, 4, 1});
    CHECK(parse_permutation("  2 1\n") == Permutation{2, 1});
    CHECK(parse_permutation("1") == Permutation{1});
    CHECK(parse_permutation("").empty());
  }

  TEST_CASE("rejects repeats, gaps, non-positive values and junk") {
    CHECK_THROWS_AS(parse_permutation("1 1 2"), ParseError);
    CHECK_THROWS_AS(parse_permutation("1 3"), ParseError);
    CHECK_THROWS_AS(parse_permutation("0 1"), ParseError);
    CHECK_THROWS_AS(parse_permutation("-1 1"), ParseError);
    CHECK_THROWS_AS(parse_permutation("1  2"), ParseError);
    CHECK_THROWS_AS(parse_permutation("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_permutation("1 2 x"), ParseError);
    CHECK_THROWS_AS(parse_permutation("1;2"), ParseError);
  }

  TEST_CASE("constructor validates") {
    CHECK_THROWS_AS(Permutation({2, 2}), DomainError);
    CHECK_THROWS_AS(Permutation({0}), DomainError);
    CHECK_NOTHROW(Permutation({2, 1}));
  }

  TEST_CASE("formatting round-trips through the parser") {
    const Permutation p{4, 1, 3, 2};
    CHECK(to_string(p) == "4 1 3 2");
    CHECK(to_string(p, ",") == "4,1,3,2");
    CHECK(parse_permutation(to_string(p, ",")) == p);
    std::ostringstream os;
    os << p;
    CHECK(os.str() == "4 1 3 2");
  }

  TEST_CASE("identity") {
    CHECK(Permutation::identity(0).empty());
    CHECK(Permutation::identity(3) == Permutation{1, 2, 3});
    CHECK(Permutation::identity(5).is_identity());
    CHECK_FALSE((Permutation{2, 1}).is_identity());
  }
}
