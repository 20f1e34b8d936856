#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <thread>
#include <vector>

#include "twostack/count_table.hpp"
#include "twostack/permutation.hpp"

namespace twostack {

struct BruteForceOptions {
  // Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned jobs = 0;
};

// Runs `visit(entries, tally)` over all n! permutations of 1..n. The space is
// split by first entry into n partitions, each walked in lexicographic order
// with its own tally; partition tallies are then summed in partition order.
// The result therefore does not depend on the worker count, provided
// Tally::operator+= is commutative.
template <typename Tally, typename Visit>
Tally tally_permutations(std::size_t n, const BruteForceOptions& options,
                         Visit visit) {
  if (n == 0) {
    Tally tally{};
    visit(std::span<const Entry>{}, tally);
    return tally;
  }
  std::vector<Tally> partials(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::vector<Entry> perm(n);
    for (std::size_t part = next++; part < n; part = next++) {
      perm[0] = static_cast<Entry>(part + 1);
      for (std::size_t i = 1, v = 1; i < n; ++v) {
        if (v != part + 1) perm[i++] = static_cast<Entry>(v);
      }
      do {
        visit(std::span<const Entry>(perm), partials[part]);
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
    }
  };
  unsigned jobs = options.jobs != 0
                      ? options.jobs
                      : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
  }
  Tally result{};
  for (const auto& partial : partials) result += partial;
  return result;
}

// W(n, k) by exhaustive enumeration: 2-stack sortable n-permutations
// bucketed by run count. Every k in 1..n appears in the row, zero or not.
CountTable brute_force_w(std::size_t n, const BruteForceOptions& options = {});

// Number of t-stack sortable n-permutations.
std::uint64_t count_t_stack_sortable(std::size_t n, std::size_t passes,
                                     const BruteForceOptions& options = {});

// Number of n-permutations avoiding `pattern`.
std::uint64_t count_avoiders(std::size_t n, const Permutation& pattern,
                             const BruteForceOptions& options = {});

// Over 2-stack sortable n-permutations: how many have d descents, and how
// many have d ascents, for d = 0..n-1.
struct DescentAscentCounts {
  std::vector<std::uint64_t> by_descents;
  std::vector<std::uint64_t> by_ascents;
};
DescentAscentCounts descent_ascent_counts(
    std::size_t n, const BruteForceOptions& options = {});

// (runs, rl) over all 2-stack sortable n-permutations.
Distribution joint_distribution_perms(std::size_t n,
                                      const BruteForceOptions& options = {});

// (leaves, root label) over all β(1,0)-trees on n + 1 nodes, by enumeration.
Distribution joint_distribution_trees(std::size_t n);

}  // namespace twostack
