#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "twostack/errors.hpp"
#include "twostack/tree_enumeration.hpp"

using namespace twostack;

namespace {

std::vector<std::string> sexprs(std::size_t nodes,
                                std::optional<std::size_t> leaves = {}) {
  std::vector<std::string> out;
  for (const auto& t : enumerate_beta_trees(nodes, leaves)) {
    out.push_back(to_sexpr(t));
  }
  return out;
}

}  // namespace

TEST_SUITE("tree_enumeration") {
  TEST_CASE("small counts") {
    CHECK(sexprs(2) == std::vector<std::string>{"(1 (1))"});
    CHECK(enumerate_beta_trees(4, 2).size() == 4);
    CHECK(enumerate_beta_trees(4).size() == 6);
  }

  TEST_CASE("canonical order on four nodes") {
    CHECK(sexprs(4) == std::vector<std::string>{
                           "(1 (1 (1 (1))))", "(1 (1 (1) (1)))",
                           "(2 (2 (1) (1)))", "(2 (1) (1 (1)))",
                           "(2 (1 (1)) (1))", "(3 (1) (1) (1))"});
    // A leaf filter keeps the relative order.
    CHECK(sexprs(4, 2) ==
          std::vector<std::string>{"(1 (1 (1) (1)))", "(2 (2 (1) (1)))",
                                   "(2 (1) (1 (1)))", "(2 (1 (1)) (1))"});
  }

  TEST_CASE("range errors") {
    CHECK_THROWS_AS(enumerate_beta_trees(1), DomainError);
    CHECK_THROWS_AS(enumerate_beta_trees(0), DomainError);
    CHECK_THROWS_AS(enumerate_beta_trees(4, 0), DomainError);
    CHECK_THROWS_AS(enumerate_beta_trees(4, 4), DomainError);
    CHECK_THROWS_AS(count_beta_trees(0, 1), DomainError);
    CHECK_THROWS_AS(count_beta_trees(3, 4), DomainError);
    CHECK_THROWS_AS(TreeCounter(3).count(4, 1), DomainError);
  }

  TEST_CASE("every enumerated tree is valid and distinct, m <= 8") {
    for (std::size_t m = 2; m <= 8; ++m) {
      std::set<std::string> seen;
      for_each_beta_tree(m, std::nullopt, [&](const BetaTree& t) {
        CHECK(validate(t.root()).empty());
        CHECK(t.nodes() == m);
        CHECK(seen.insert(to_sexpr(t)).second);
      });
    }
  }

  TEST_CASE("same set as generate-and-filter, m <= 6") {
    for (int m = 2; m <= 6; ++m) {
      const auto expected = oracle::beta_trees(m);
      std::set<std::string> actual;
      for_each_beta_tree(static_cast<std::size_t>(m), std::nullopt,
                         [&](const BetaTree& t) { actual.insert(to_sexpr(t)); });
      std::set<std::string> expected_keys;
      for (const auto& [text, stats] : expected) expected_keys.insert(text);
      CHECK(actual == expected_keys);
    }
  }

  TEST_CASE("exactly one single-leaf tree, the all-ones path") {
    for (std::size_t m = 2; m <= 10; ++m) {
      const auto trees = enumerate_beta_trees(m, 1);
      REQUIRE(trees.size() == 1);
      std::string path = "(1)";
      for (std::size_t i = 1; i < m; ++i) path = "(1 " + path + ")";
      CHECK(to_sexpr(trees[0]) == path);
    }
  }

  TEST_CASE("serialization round trip, m <= 6") {
    for (std::size_t m = 2; m <= 6; ++m) {
      for_each_beta_tree(m, std::nullopt, [](const BetaTree& t) {
        CHECK(parse_sexpr(to_sexpr(t)) == t.root());
        CHECK(parse_json_tree(to_json(t.root())) == t.root());
      });
    }
  }

  TEST_CASE("T(n,k) examples") {
    CHECK(count_beta_trees(1, 1) == 1);
    CHECK(count_beta_trees(3, 2) == 4);
    CHECK(count_beta_trees(4, 2) == 10);
    CHECK(count_beta_trees(4, 2, TreeCountMethod::Recursion) == 10);
    CHECK(count_beta_trees(4, 2, TreeCountMethod::Enumeration) == 10);
  }

  TEST_CASE("recursion agrees with enumeration, n <= 8, including root labels") {
    const TreeCounter counter(8);
    for (std::size_t n = 1; n <= 8; ++n) {
      std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> by_stat;
      std::vector<std::uint64_t> by_leaves(n + 1, 0);
      for_each_beta_tree(n + 1, std::nullopt, [&](const BetaTree& t) {
        ++by_leaves[t.leaves()];
        ++by_stat[{t.leaves(), static_cast<std::size_t>(t.root_label())}];
      });
      for (std::size_t k = 1; k <= n; ++k) {
        CHECK(counter.count(n, k) == by_leaves[k]);
        for (std::size_t label = 0; label <= k + 1; ++label) {
          const auto it = by_stat.find({k, label});
          const std::uint64_t expected = it == by_stat.end() ? 0 : it->second;
          CHECK(counter.count(n, k, label) == expected);
        }
      }
    }
  }

  TEST_CASE("leaf filter matches the unfiltered histogram, m <= 8") {
    for (std::size_t m = 2; m <= 8; ++m) {
      std::vector<std::size_t> histogram(m, 0);
      for_each_beta_tree(m, std::nullopt,
                         [&](const BetaTree& t) { ++histogram[t.leaves()]; });
      for (std::size_t k = 1; k < m; ++k) {
        CHECK(enumerate_beta_trees(m, k).size() == histogram[k]);
      }
    }
  }
}
