#include "twostack/brute_force.hpp"

#include "twostack/stack_sort.hpp"
#include "twostack/statistics.hpp"
#include "twostack/tree_enumeration.hpp"

namespace twostack {

namespace {

// Fixed-length histogram with elementwise addition.
struct Histogram {
  std::vector<std::uint64_t> bins;

  void bump(std::size_t index, std::size_t size) {
    if (bins.size() < size) bins.resize(size, 0);
    ++bins[index];
  }
  Histogram& operator+=(const Histogram& other) {
    if (bins.size() < other.bins.size()) bins.resize(other.bins.size(), 0);
    for (std::size_t i = 0; i < other.bins.size(); ++i) bins[i] += other.bins[i];
    return *this;
  }
};

struct Counter {
  std::uint64_t value = 0;
  Counter& operator+=(const Counter& other) {
    value += other.value;
    return *this;
  }
};

struct DescentAscentTally {
  Histogram descents;
  Histogram ascents;
  DescentAscentTally& operator+=(const DescentAscentTally& other) {
    descents += other.descents;
    ascents += other.ascents;
    return *this;
  }
};

}  // namespace

CountTable brute_force_w(std::size_t n, const BruteForceOptions& options) {
  const auto histogram = tally_permutations<Histogram>(
      n, options, [n](std::span<const Entry> p, Histogram& h) {
        if (is_t_stack_sortable(p, 2)) h.bump(count_runs(p), n + 1);
      });
  CountTable table;
  table.n = n;
  for (std::size_t k = 1; k <= n; ++k) {
    table.row[k] = k < histogram.bins.size() ? histogram.bins[k] : 0;
  }
  return table;
}

std::uint64_t count_t_stack_sortable(std::size_t n, std::size_t passes,
                                     const BruteForceOptions& options) {
  return tally_permutations<Counter>(
             n, options,
             [passes](std::span<const Entry> p, Counter& c) {
               c.value += is_t_stack_sortable(p, passes);
             })
      .value;
}

std::uint64_t count_avoiders(std::size_t n, const Permutation& pattern,
                             const BruteForceOptions& options) {
  return tally_permutations<Counter>(
             n, options,
             [&pattern](std::span<const Entry> p, Counter& c) {
               const auto perm =
                   Permutation::from_trusted(std::vector<Entry>(p.begin(), p.end()));
               c.value += !contains_pattern(perm, pattern);
             })
      .value;
}

DescentAscentCounts descent_ascent_counts(std::size_t n,
                                          const BruteForceOptions& options) {
  auto tally = tally_permutations<DescentAscentTally>(
      n, options, [n](std::span<const Entry> p, DescentAscentTally& t) {
        if (!is_t_stack_sortable(p, 2)) return;
        t.descents.bump(count_descents(p), n);
        t.ascents.bump(count_ascents(p), n);
      });
  tally.descents.bins.resize(n, 0);
  tally.ascents.bins.resize(n, 0);
  return {std::move(tally.descents.bins), std::move(tally.ascents.bins)};
}

Distribution joint_distribution_perms(std::size_t n,
                                      const BruteForceOptions& options) {
  return tally_permutations<Distribution>(
      n, options, [](std::span<const Entry> p, Distribution& d) {
        if (is_t_stack_sortable(p, 2)) d.add(count_runs(p), count_rl_maxima(p));
      });
}

Distribution joint_distribution_trees(std::size_t n) {
  Distribution d;
  for_each_beta_tree(n + 1, std::nullopt, [&](const BetaTree& t) {
    d.add(t.leaves(), static_cast<std::size_t>(t.root_label()));
  });
  return d;
}

}  // namespace twostack
