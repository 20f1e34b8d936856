#include <doctest.h>

#include "oracles.hpp"
#include "twostack/errors.hpp"
#include "twostack/stack_sort.hpp"

using namespace twostack;

namespace {

Permutation from_word(const oracle::Word& w) {
  return Permutation(std::vector<Entry>(w.begin(), w.end()));
}

}  // namespace

TEST_SUITE("stack_sort") {
  TEST_CASE("single pass examples") {
    CHECK(stack_sort(Permutation{1, 2, 3}) == Permutation{1, 2, 3});
    CHECK(stack_sort(Permutation{3, 5, 2, 4, 1}) == Permutation{3, 2, 1, 4, 5});
    CHECK(stack_sort(Permutation{2, 3, 1}) == Permutation{2, 1, 3});
    CHECK(stack_sort(Permutation{}).empty());
  }

  TEST_CASE("multiple passes") {
    const Permutation p{3, 5, 2, 4, 1};
    CHECK(stack_sort(p, 0) == p);
    CHECK(stack_sort(p, 2).is_identity());
    CHECK(stack_sort(Permutation{3, 2, 4, 1}, 2) == Permutation{2, 1, 3, 4});
  }

  TEST_CASE("two-pass witnesses: a sortable word with an unsortable subword") {
    CHECK(is_t_stack_sortable(Permutation{3, 5, 2, 4, 1}, 2));
    CHECK_FALSE(is_t_stack_sortable(Permutation{3, 2, 4, 1}, 2));
    CHECK(is_t_stack_sortable(Permutation{1, 2, 3}, 0));
    CHECK_FALSE(is_t_stack_sortable(Permutation{2, 1}, 0));
  }

  TEST_CASE("passes_to_sort") {
    CHECK(passes_to_sort(Permutation{}) == 0);
    CHECK(passes_to_sort(Permutation{1, 2, 3}) == 0);
    CHECK(passes_to_sort(Permutation{3, 5, 2, 4, 1}) == 2);
    CHECK(passes_to_sort(Permutation{3, 2, 4, 1}) == 3);
  }

  TEST_CASE("recursive rule agrees with the stack machine, n <= 8") {
    for (int n = 0; n <= 8; ++n) {
      for (const auto& w : oracle::all_permutations(n)) {
        const auto p = from_word(w);
        const auto expected = from_word(oracle::stack_machine(w));
        REQUIRE(stack_sort(p) == expected);
      }
    }
  }

  TEST_CASE("properties over all permutations, n <= 7") {
    for (int n = 1; n <= 7; ++n) {
      for (const auto& w : oracle::all_permutations(n)) {
        const auto p = from_word(w);
        const auto sorted = stack_sort(p);
        // The maximum always leaves last.
        CHECK(sorted.back() == n);
        // The identity is a fixed point, so sortability is monotone in t.
        for (std::size_t t = 0; t < 4; ++t) {
          if (is_t_stack_sortable(p, t)) CHECK(is_t_stack_sortable(p, t + 1));
        }
        const std::size_t need = passes_to_sort(p);
        CHECK(need <= static_cast<std::size_t>(n - 1));
        CHECK(is_t_stack_sortable(p, need));
        if (need > 0) CHECK_FALSE(is_t_stack_sortable(p, need - 1));
      }
    }
  }

  TEST_CASE("three passes: counts 1 2 6 24 114 606 3494") {
    const std::vector<std::size_t> expected{1, 2, 6, 24, 114, 606, 3494};
    for (int n = 1; n <= 7; ++n) {
      std::size_t count = 0;
      for (const auto& w : oracle::all_permutations(n)) {
        count += is_t_stack_sortable(from_word(w), 3);
      }
      CHECK(count == expected[static_cast<std::size_t>(n - 1)]);
    }
  }

  TEST_CASE("pattern containment examples") {
    CHECK(contains_pattern(Permutation{3, 5, 2, 4, 1}, Permutation{2, 3, 1}));
    CHECK_FALSE(contains_pattern(Permutation{1, 2, 3}, Permutation{2, 1}));
    CHECK(contains_pattern(Permutation{2, 3, 1}, Permutation{2, 3, 1}));
    CHECK_FALSE(contains_pattern(Permutation{1, 2}, Permutation{1, 2, 3}));
    CHECK(contains_pattern(Permutation{2, 1}, Permutation{1}));
    CHECK_THROWS_AS(contains_pattern(Permutation{1}, Permutation{}), DomainError);
  }

  TEST_CASE("backtracking agrees with subset enumeration") {
    std::vector<oracle::Word> patterns;
    for (int k = 1; k <= 4; ++k) {
      for (auto& q : oracle::all_permutations(k)) patterns.push_back(q);
    }
    for (int n = 0; n <= 6; ++n) {
      for (const auto& w : oracle::all_permutations(n)) {
        const auto p = from_word(w);
        for (const auto& q : patterns) {
          REQUIRE(contains_pattern(p, from_word(q)) ==
                  oracle::contains_by_subsets(w, q));
        }
      }
    }
  }

  TEST_CASE("one pass sorts exactly the 231-avoiders, n <= 9") {
    const Permutation pattern{2, 3, 1};
    for (int n = 0; n <= 9; ++n) {
      std::vector<Entry> e = Permutation::identity(static_cast<std::size_t>(n)).vector();
      do {
        const auto p = Permutation::from_trusted(e);
        REQUIRE(is_t_stack_sortable(p, 1) == !contains_pattern(p, pattern));
      } while (std::next_permutation(e.begin(), e.end()));
    }
  }
}
