#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twostack/brute_force.hpp"

namespace twostack {

// One comparison inside a verification suite.
struct Check {
  std::string claim;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct SuiteReport {
  std::string suite;
  std::size_t max_n = 0;
  std::vector<Check> checks;
  // Effective ranges and other context for the reader.
  std::vector<std::string> notes;

  std::size_t failures() const noexcept;
  bool passed() const noexcept { return failures() == 0; }
};

// Exhaustive portions of a suite (walking n! permutations, or enumerating
// trees) stop at these sizes even when max_n is larger; closed-form portions
// run all the way to max_n.
inline constexpr std::size_t kPermutationSearchCap = 10;
inline constexpr std::size_t kTreeSearchCap = 9;

// catalan, formula-vs-brute, tree-vs-perm, joint-rl, symmetry, unimodality,
// map-substitution, lemma1, total.
std::span<const std::string_view> suite_names() noexcept;

// Throws ParseError for an unknown suite name.
SuiteReport run_suite(std::string_view name, std::size_t max_n,
                      const BruteForceOptions& options = {});

}  // namespace twostack
