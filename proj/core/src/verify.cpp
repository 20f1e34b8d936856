#include "twostack/verify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "twostack/errors.hpp"
#include "twostack/formulas.hpp"
#include "twostack/marked_bijection.hpp"
#include "twostack/stack_sort.hpp"
#include "twostack/statistics.hpp"
#include "twostack/tree_enumeration.hpp"

namespace twostack {

namespace {

constexpr std::array<std::string_view, 9> kSuites = {
    "catalan",      "formula-vs-brute", "tree-vs-perm",
    "joint-rl",     "symmetry",         "unimodality",
    "map-substitution", "lemma1",       "total"};

std::string str(const BigInt& v) { return to_decimal(v); }
std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(const std::string& v) { return v; }

template <typename T>
std::string str(const std::vector<T>& values) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    os << (i ? " " : "") << values[i];
  }
  os << ']';
  return os.str();
}

std::string cell(std::size_t n, std::size_t k) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

template <typename A, typename B>
void expect_equal(SuiteReport& report, std::string claim, const A& expected,
                  const B& actual) {
  Check c;
  c.claim = std::move(claim);
  c.expected = str(expected);
  c.actual = str(actual);
  c.passed = expected == actual;
  report.checks.push_back(std::move(c));
}

void expect_no_failures(SuiteReport& report, std::string claim,
                        std::uint64_t failures, std::uint64_t tried) {
  expect_equal(report,
               std::move(claim) + " [" + std::to_string(tried) + " cases]",
               std::uint64_t{0}, failures);
  report.checks.back().expected = "0 failures";
  report.checks.back().actual = std::to_string(failures) + " failures";
}

std::string range_note(std::string_view what, std::size_t from,
                       std::size_t to) {
  return std::string(what) + ": n = " + std::to_string(from) + ".." +
         std::to_string(to);
}

void catalan_suite(SuiteReport& r, std::size_t max_n,
                   const BruteForceOptions& opts) {
  const std::size_t cap = std::min(max_n, kPermutationSearchCap);
  r.notes.push_back(range_note("exhaustive", 0, cap));
  const Permutation pattern{2, 3, 1};
  struct Mismatch {
    std::uint64_t value = 0;
    Mismatch& operator+=(const Mismatch& o) {
      value += o.value;
      return *this;
    }
  };
  for (std::size_t n = 0; n <= cap; ++n) {
    const BigInt expected = catalan(n);
    expect_equal(r, "1-stack sortable " + std::to_string(n) + "-perms = C_n",
                 expected, BigInt(count_t_stack_sortable(n, 1, opts)));
    expect_equal(r, "231-avoiding " + std::to_string(n) + "-perms = C_n",
                 expected, BigInt(count_avoiders(n, pattern, opts)));
    const auto mismatches = tally_permutations<Mismatch>(
        n, opts, [&](std::span<const Entry> p, Mismatch& m) {
          const auto perm =
              Permutation::from_trusted(std::vector<Entry>(p.begin(), p.end()));
          m.value += is_t_stack_sortable(p, 1) == contains_pattern(perm, pattern);
        });
    std::uint64_t perms = 1;
    for (std::size_t i = 2; i <= n; ++i) perms *= i;
    expect_no_failures(
        r, "n=" + std::to_string(n) + ": 1-stack sortable <=> avoids 231",
        mismatches.value, perms);
  }
}

void formula_vs_brute_suite(SuiteReport& r, std::size_t max_n,
                            const BruteForceOptions& opts) {
  const std::size_t cap = std::min(max_n, kPermutationSearchCap);
  r.notes.push_back(range_note("exhaustive", 1, cap));
  std::size_t cells = 0;
  for (std::size_t n = 1; n <= cap; ++n) {
    const CountTable brute = brute_force_w(n, opts);
    for (std::size_t k = 1; k <= n; ++k, ++cells) {
      expect_equal(r, "W" + cell(n, k) + " formula vs brute force",
                   w_formula(n, k), brute.row.at(k));
    }
  }
  r.notes.push_back(std::to_string(cells) + " (n,k) cells compared");
}

void total_suite(SuiteReport& r, std::size_t max_n,
                 const BruteForceOptions& opts) {
  const std::size_t cap = std::min(max_n, kPermutationSearchCap);
  r.notes.push_back(range_note("exhaustive", 1, cap));
  r.notes.push_back(range_note("row sums", 1, max_n));
  for (std::size_t n = 1; n <= cap; ++n) {
    expect_equal(r, "W_" + std::to_string(n) + " formula vs brute force",
                 w_total_formula(n), BigInt(count_t_stack_sortable(n, 2, opts)));
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    BigInt row_sum = 0;
    for (std::size_t k = 1; k <= n; ++k) row_sum += w_formula(n, k);
    expect_equal(r, "sum_k W(" + std::to_string(n) + ",k) = W_n",
                 w_total_formula(n), row_sum);
  }
}

void tree_vs_perm_suite(SuiteReport& r, std::size_t max_n,
                        const BruteForceOptions& opts) {
  const std::size_t enum_cap = std::min(max_n, kTreeSearchCap);
  const std::size_t brute_cap = std::min(enum_cap, kPermutationSearchCap);
  r.notes.push_back(range_note("recursion vs formula", 1, max_n));
  r.notes.push_back(range_note("enumeration vs recursion", 1, enum_cap));
  r.notes.push_back(range_note("enumeration vs brute-force permutations", 1,
                               brute_cap));
  if (max_n == 0) return;
  const TreeCounter counter(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<std::uint64_t> enumerated;
    if (n <= enum_cap) {
      enumerated.assign(n + 1, 0);
      for_each_beta_tree(n + 1, std::nullopt,
                         [&](const BetaTree& t) { ++enumerated[t.leaves()]; });
    }
    CountTable brute;
    if (n <= brute_cap) brute = brute_force_w(n, opts);
    for (std::size_t k = 1; k <= n; ++k) {
      const BigInt recursion = counter.count(n, k);
      expect_equal(r, "T" + cell(n, k) + " recursion vs W formula",
                   w_formula(n, k), recursion);
      if (n <= enum_cap) {
        expect_equal(r, "T" + cell(n, k) + " enumeration vs recursion",
                     recursion, BigInt(enumerated[k]));
      }
      if (n <= brute_cap) {
        expect_equal(r, "T" + cell(n, k) + " enumeration vs brute-force W",
                     brute.row.at(k), BigInt(enumerated[k]));
      }
    }
  }
}

void joint_rl_suite(SuiteReport& r, std::size_t max_n,
                    const BruteForceOptions& opts) {
  const std::size_t cap =
      std::min({max_n, kTreeSearchCap, kPermutationSearchCap});
  r.notes.push_back(range_note("exhaustive", 1, cap));
  for (std::size_t n = 1; n <= cap; ++n) {
    expect_equal(r,
                 "n=" + std::to_string(n) +
                     ": (leaves, root label) over trees = (runs, rl) over "
                     "2-stack sortable perms",
                 to_string(joint_distribution_trees(n)),
                 to_string(joint_distribution_perms(n, opts)));
  }
}

void symmetry_suite(SuiteReport& r, std::size_t max_n,
                    const BruteForceOptions& opts) {
  const std::size_t cap = std::min(max_n, kPermutationSearchCap);
  r.notes.push_back(range_note("closed form", 1, max_n));
  r.notes.push_back(range_note("exhaustive descents vs ascents", 1, cap));
  FactorialTable fact;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::string asymmetric;
    for (std::size_t k = 1; k <= n; ++k) {
      if (w_formula(fact, n, k) != w_formula(fact, n, n + 1 - k)) {
        asymmetric += (asymmetric.empty() ? "" : " ") + std::to_string(k);
      }
    }
    expect_equal(r, "W(" + std::to_string(n) + ",k) = W(n,n+1-k) for all k",
                 std::string("symmetric"),
                 asymmetric.empty() ? std::string("symmetric")
                                    : "asymmetric at k = " + asymmetric);
  }
  for (std::size_t n = 1; n <= cap; ++n) {
    const auto counts = descent_ascent_counts(n, opts);
    expect_equal(r,
                 "n=" + std::to_string(n) +
                     ": 2-stack sortable perms by descents = by ascents",
                 str(counts.by_ascents), str(counts.by_descents));
  }
}

void unimodality_suite(SuiteReport& r, std::size_t max_n) {
  r.notes.push_back(range_note("closed form", 1, max_n));
  FactorialTable fact;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<BigInt> w(n + 1);
    for (std::size_t k = 1; k <= n; ++k) w[k] = w_formula(fact, n, k);

    // W(n,k) > W(n,k-1) exactly when 2k <= n+1; equal exactly at the
    // plateau k = n/2 + 1 for even n; smaller otherwise.
    std::string bad;
    for (std::size_t k = 2; k <= n; ++k) {
      const int actual = w[k] > w[k - 1] ? 1 : (w[k] == w[k - 1] ? 0 : -1);
      int expected = -1;
      if (2 * k <= n + 1) {
        expected = 1;
      } else if (n % 2 == 0 && k == n / 2 + 1) {
        expected = 0;
      }
      if (actual != expected) {
        bad += (bad.empty() ? "" : " ") + std::to_string(k);
      }
    }
    expect_equal(r,
                 "n=" + std::to_string(n) +
                     ": W(n,k) rises iff k <= (n+1)/2, plateau iff n even",
                 std::string("ok"),
                 bad.empty() ? std::string("ok") : "violated at k = " + bad);

    std::vector<std::size_t> expected_peaks{(n + 1) / 2};
    if (n % 2 == 0) expected_peaks.push_back(n / 2 + 1);
    const BigInt top = *std::max_element(w.begin() + 1, w.end());
    std::vector<std::size_t> peaks;
    for (std::size_t k = 1; k <= n; ++k) {
      if (w[k] == top) peaks.push_back(k);
    }
    expect_equal(r, "n=" + std::to_string(n) + ": peak positions",
                 str(expected_peaks), str(peaks));
  }
}

void map_substitution_suite(SuiteReport& r, std::size_t max_n) {
  r.notes.push_back(range_note("closed form", 1, max_n));
  r.notes.push_back(
      "substitution f = k, pv = n+1-k; the reading f = k-1, pv = n-k gives " +
      to_decimal(map_count_formula(1, 1)) + " at (n,k) = (3,2) instead of " +
      to_decimal(w_formula(3, 2)));
  FactorialTable fact;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::string bad;
    for (std::size_t k = 1; k <= n; ++k) {
      if (w_formula(fact, n, k) != map_count_formula(fact, k, n + 1 - k)) {
        bad += (bad.empty() ? "" : " ") + std::to_string(k);
      }
    }
    expect_equal(r,
                 "W(" + std::to_string(n) + ",k) = maps(f=k, pv=n+1-k) for all k",
                 std::string("equal"),
                 bad.empty() ? std::string("equal") : "differs at k = " + bad);
  }
}

void reduction_suite(SuiteReport& r, std::size_t max_n) {
  const std::size_t cap = std::min(max_n, kPermutationSearchCap);
  r.notes.push_back(range_note("exhaustive", 2, cap));
  for (std::size_t n = 2; n <= cap; ++n) {
    const std::string at = "n=" + std::to_string(n) + ": ";
    std::uint64_t type1 = 0, type1_sortable = 0;
    std::uint64_t round_trip = 0, descents = 0, rl = 0, sortability = 0;
    std::set<MarkedPermutation> image;

    std::vector<Entry> entries = Permutation::identity(n).vector();
    do {
      const auto p = Permutation::from_trusted(entries);
      if (classify(p) != PermType::Type1) continue;
      ++type1;
      const MarkedPermutation mp = reduce_type1(p);
      round_trip += expand_marked(mp) != p;
      descents += count_descents(mp.perm().entries()) != count_descents(entries);
      rl += count_rl_maxima(mp.perm().entries()) < count_rl_maxima(entries);
      const bool sortable = is_t_stack_sortable(p, 2);
      sortability += is_t_stack_sortable(mp.perm(), 2) != sortable;
      if (sortable) {
        ++type1_sortable;
        image.insert(mp);
      }
    } while (std::next_permutation(entries.begin(), entries.end()));

    std::uint64_t marked = 0, targets = 0, inverse_trip = 0, missing = 0;
    entries = Permutation::identity(n - 1).vector();
    do {
      const auto q = Permutation::from_trusted(entries);
      const bool sortable = is_t_stack_sortable(q, 2);
      const std::size_t t_max = count_rl_maxima(entries);
      for (std::size_t t = 1; t <= t_max; ++t) {
        const MarkedPermutation mp(q, t);
        ++marked;
        const Permutation expanded = expand_marked(mp);
        if (classify(expanded) != PermType::Type1 ||
            reduce_type1(expanded) != mp) {
          ++inverse_trip;
        }
        if (sortable) {
          ++targets;
          missing += !image.contains(mp);
        }
      }
    } while (std::next_permutation(entries.begin(), entries.end()));

    expect_no_failures(r, at + "F^-1(F(p)) = p on type 1 perms", round_trip,
                       type1);
    expect_no_failures(r, at + "F(F^-1(m)) = m on marked (n-1)-perms",
                       inverse_trip, marked);
    expect_no_failures(r, at + "F preserves descents", descents, type1);
    expect_no_failures(r, at + "F does not decrease rl", rl, type1);
    expect_no_failures(r, at + "F(p) 2-stack sortable iff p is", sortability,
                       type1);
    expect_equal(r, at + "F injective on 2-stack sortable type 1 perms",
                 type1_sortable, static_cast<std::uint64_t>(image.size()));
    // |image| = |targets| with nothing missed means the image is exactly
    // the set of marked 2-stack sortable (n-1)-perms.
    expect_equal(r, at + "F onto marked 2-stack sortable (n-1)-perms",
                 targets, static_cast<std::uint64_t>(image.size()));
    if (missing != 0) {
      r.checks.back().passed = false;
      r.checks.back().actual += " (" + std::to_string(missing) + " missed)";
    }
  }
}

}  // namespace

std::size_t SuiteReport::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(),
                    [](const Check& c) { return !c.passed; }));
}

std::span<const std::string_view> suite_names() noexcept { return kSuites; }

SuiteReport run_suite(std::string_view name, std::size_t max_n,
                      const BruteForceOptions& options) {
  SuiteReport report;
  report.suite = std::string(name);
  report.max_n = max_n;
  if (name == "catalan") {
    catalan_suite(report, max_n, options);
  } else if (name == "formula-vs-brute") {
    formula_vs_brute_suite(report, max_n, options);
  } else if (name == "tree-vs-perm") {
    tree_vs_perm_suite(report, max_n, options);
  } else if (name == "joint-rl") {
    joint_rl_suite(report, max_n, options);
  } else if (name == "symmetry") {
    symmetry_suite(report, max_n, options);
  } else if (name == "unimodality") {
    unimodality_suite(report, max_n);
  } else if (name == "map-substitution") {
    map_substitution_suite(report, max_n);
  } else if (name == "lemma1") {
    reduction_suite(report, max_n);
  } else if (name == "total") {
    total_suite(report, max_n, options);
  } else {
    throw ParseError("unknown verification suite \"" + std::string(name) + "\"");
  }
  return report;
}

}  // namespace twostack
