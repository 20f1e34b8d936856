#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "twostack/brute_force.hpp"
#include "twostack/errors.hpp"
#include "twostack/formulas.hpp"
#include "twostack/marked_bijection.hpp"
#include "twostack/stack_sort.hpp"
#include "twostack/statistics.hpp"
#include "twostack/tree_enumeration.hpp"
#include "twostack/verify.hpp"

namespace twostack::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

struct Options {
  std::string format = "text";
  unsigned jobs = 0;

  std::vector<std::string> perm_words;
  std::size_t passes = 1;
  std::size_t sortable_passes = 2;
  std::string pattern;
  std::size_t mark = 0;

  std::string count_what;
  std::string method;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<std::size_t> f;
  std::optional<std::size_t> pv;

  std::optional<std::size_t> nodes;
  std::optional<std::size_t> runs;
  std::optional<std::size_t> leaves;
  std::string filter;

  std::string suite;
  std::size_t max_n = 8;
};

class Invocation {
 public:
  Invocation(const Options& opts, std::ostream& out)
      : opts_(opts), out_(out) {
    if (opts.format == "json") {
      format_ = Format::Json;
    } else if (opts.format == "csv") {
      format_ = Format::Csv;
    }
    brute_.jobs = opts.jobs;
  }

  int sort() {
    const Permutation p = perm();
    const Permutation sorted = stack_sort(p, opts_.passes);
    if (text_only("sort")) {
      out_ << sorted << '\n';
    } else {
      emit("sort", {{"perm", to_string(p)}, {"passes", opts_.passes}},
           sorted.vector());
    }
    return kExitOk;
  }

  int sortable() {
    const Permutation p = perm();
    const bool yes = is_t_stack_sortable(p, opts_.sortable_passes);
    const std::size_t minimal = passes_to_sort(p);
    if (text_only("sortable")) {
      out_ << (yes ? "yes" : "no") << '\n'
           << "minimal passes: " << minimal << '\n';
    } else {
      emit("sortable", {{"perm", to_string(p)}, {"t", opts_.sortable_passes}},
           {{"sortable", yes}, {"minimal_passes", minimal}});
    }
    return kExitOk;
  }

  int stats() {
    const Permutation p = perm();
    const Statistics s = compute_statistics(p);
    if (text_only("stats")) {
      out_ << "descents: " << s.descents << '\n'
           << "ascents: " << s.ascents << '\n'
           << "runs: " << s.runs << '\n'
           << "rl-maxima:";
      for (Entry a : s.rl_maxima) out_ << ' ' << a;
      out_ << '\n' << "type: " << to_string(s.type) << '\n';
    } else {
      emit("stats", {{"perm", to_string(p)}},
           {{"descents", s.descents},
            {"ascents", s.ascents},
            {"runs", s.runs},
            {"rl_maxima", s.rl_maxima},
            {"type", std::string(to_string(s.type))}});
    }
    return kExitOk;
  }

  int pattern() {
    const Permutation p = perm();
    const Permutation q = parse_permutation(opts_.pattern);
    const bool contains = contains_pattern(p, q);
    if (text_only("pattern")) {
      out_ << (contains ? "yes" : "no") << '\n';
    } else {
      emit("pattern", {{"perm", to_string(p)}, {"q", to_string(q)}}, contains);
    }
    return kExitOk;
  }

  int fmap() {
    const Permutation p = perm();
    const MarkedPermutation mp = reduce_type1(p);
    if (text_only("fmap")) {
      out_ << mp.perm() << '\n' << "mark: " << mp.mark_rank() << '\n';
    } else {
      emit("fmap", {{"perm", to_string(p)}},
           {{"perm", mp.perm().vector()}, {"mark", mp.mark_rank()}});
    }
    return kExitOk;
  }

  int finv() {
    const Permutation p = perm();
    const Permutation expanded = expand_marked(MarkedPermutation(p, opts_.mark));
    if (text_only("finv")) {
      out_ << expanded << '\n';
    } else {
      emit("finv", {{"perm", to_string(p)}, {"mark", opts_.mark}},
           expanded.vector());
    }
    return kExitOk;
  }

  int count() {
    const std::string& what = opts_.count_what;
    json input{{"what", what}};
    BigInt value;
    std::string method = opts_.method;
    if (what == "w") {
      const auto [n, k] = need_nk(input);
      method = pick_method(method, "formula", {"formula", "brute"});
      value = method == "formula" ? w_formula(n, k)
                                  : brute_force_w(n, brute_).row.at(k);
    } else if (what == "trees") {
      const auto [n, k] = need_nk(input);
      method = pick_method(method, "auto", {"auto", "enum", "memo"});
      const auto how = method == "enum"   ? TreeCountMethod::Enumeration
                       : method == "memo" ? TreeCountMethod::Recursion
                                          : TreeCountMethod::Automatic;
      value = count_beta_trees(n, k, how);
    } else if (what == "maps") {
      const std::size_t f = need(opts_.f, "--f");
      const std::size_t pv = need(opts_.pv, "--pv");
      input["f"] = f;
      input["pv"] = pv;
      method = pick_method(method, "formula", {"formula"});
      value = map_count_formula(f, pv);
    } else if (what == "catalan") {
      const std::size_t n = need(opts_.n, "--n");
      input["n"] = n;
      method = pick_method(method, "formula", {"formula", "brute"});
      value = method == "formula" ? catalan(n)
                                  : BigInt(count_t_stack_sortable(n, 1, brute_));
    } else if (what == "total") {
      const std::size_t n = need(opts_.n, "--n");
      input["n"] = n;
      method = pick_method(method, "formula", {"formula", "brute"});
      value = method == "formula" ? w_total_formula(n)
                                  : BigInt(count_t_stack_sortable(n, 2, brute_));
    } else {
      throw ParseError("count: unknown quantity \"" + what +
                       "\"; expected w, trees, maps, catalan or total");
    }
    input["method"] = method;
    if (text_only("count")) {
      out_ << to_decimal(value) << '\n';
    } else {
      emit("count", input, to_decimal(value));
    }
    return kExitOk;
  }

  int table() {
    const std::size_t n = need(opts_.n, "--n");
    const std::string method =
        pick_method(opts_.method, "formula", {"formula", "brute"});
    CountTable t;
    if (method == "brute") {
      t = brute_force_w(n, brute_);
    } else {
      t.n = n;
      for (std::size_t k = 1; k <= n; ++k) t.row[k] = w_formula(n, k);
    }
    switch (format_) {
      case Format::Csv:
        out_ << to_csv(t);
        break;
      case Format::Json:
        emit("table", {{"n", n}, {"method", method}}, json::parse(to_json(t)));
        break;
      case Format::Text:
        for (const auto& [k, count] : t.row) {
          out_ << "W(" << n << "," << k << ") = " << to_decimal(count) << '\n';
        }
        out_ << "total = " << to_decimal(t.total()) << '\n';
        break;
    }
    return kExitOk;
  }

  int enumerate_perms() {
    const std::size_t n = need(opts_.n, "--n");
    if (opts_.nodes || opts_.leaves) {
      throw ParseError("enumerate perms takes --n, --runs and --filter");
    }
    std::size_t passes = 0;
    if (opts_.filter == "2ss") {
      passes = 2;
    } else if (opts_.filter == "1ss") {
      passes = 1;
    } else if (!opts_.filter.empty()) {
      throw ParseError("unknown filter \"" + opts_.filter +
                       "\"; expected 1ss or 2ss");
    }
    if (format_ == Format::Csv) unsupported_csv("enumerate");
    const json input{{"kind", "perms"},
                     {"n", n},
                     {"runs", opts_.runs ? json(*opts_.runs) : json(nullptr)},
                     {"filter", opts_.filter}};
    std::vector<Entry> entries = Permutation::identity(n).vector();
    do {
      if (passes != 0 && !is_t_stack_sortable(entries, passes)) continue;
      if (opts_.runs && count_runs(entries) != *opts_.runs) continue;
      if (format_ == Format::Json) {
        emit("enumerate", input, entries);
      } else {
        out_ << to_string(Permutation::from_trusted(entries)) << '\n';
      }
    } while (std::next_permutation(entries.begin(), entries.end()));
    return kExitOk;
  }

  int enumerate_trees() {
    if (opts_.runs || !opts_.filter.empty()) {
      throw ParseError("enumerate trees takes --nodes or --n, and --leaves");
    }
    if (opts_.n && opts_.nodes) {
      throw ParseError("give either --nodes or --n, not both");
    }
    if (!opts_.n && !opts_.nodes) throw ParseError("missing --nodes or --n");
    const std::size_t nodes = opts_.nodes ? *opts_.nodes : *opts_.n + 1;
    if (format_ == Format::Csv) unsupported_csv("enumerate");
    const json input{
        {"kind", "trees"},
        {"nodes", nodes},
        {"leaves", opts_.leaves ? json(*opts_.leaves) : json(nullptr)}};
    for_each_beta_tree(nodes, opts_.leaves, [&](const BetaTree& t) {
      if (format_ == Format::Json) {
        emit("enumerate", input, json::parse(to_json(t.root())));
      } else {
        out_ << to_sexpr(t) << '\n';
      }
    });
    return kExitOk;
  }

  int verify() {
    std::vector<std::string_view> suites;
    if (opts_.suite == "all") {
      const auto names = suite_names();
      suites.assign(names.begin(), names.end());
    } else {
      suites.push_back(opts_.suite);
    }
    // Validate every name before running anything.
    for (auto name : suites) {
      const auto names = suite_names();
      if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw ParseError("unknown suite \"" + std::string(name) + "\"");
      }
    }
    if (format_ == Format::Csv) unsupported_csv("verify");
    bool all_passed = true;
    for (auto name : suites) {
      const SuiteReport report = run_suite(name, opts_.max_n, brute_);
      all_passed = all_passed && report.passed();
      if (format_ == Format::Json) {
        json checks = json::array();
        for (const auto& c : report.checks) {
          checks.push_back({{"claim", c.claim},
                            {"expected", c.expected},
                            {"actual", c.actual},
                            {"passed", c.passed}});
        }
        emit("verify", {{"suite", report.suite}, {"max_n", report.max_n}},
             {{"passed", report.passed()},
              {"failures", report.failures()},
              {"checks", std::move(checks)},
              {"notes", report.notes}});
        continue;
      }
      out_ << "suite " << report.suite << " (max-n " << report.max_n << ")\n";
      for (const auto& note : report.notes) out_ << "  # " << note << '\n';
      for (const auto& c : report.checks) {
        out_ << (c.passed ? "  PASS " : "  FAIL ") << c.claim
             << ": expected " << c.expected << ", actual " << c.actual << '\n';
      }
      out_ << (report.passed() ? "pass" : "FAIL") << ": " << report.suite
           << ", " << report.checks.size() - report.failures() << "/"
           << report.checks.size() << " checks\n";
    }
    return all_passed ? kExitOk : kExitMismatch;
  }

 private:
  Permutation perm() const {
    std::string text;
    for (const auto& word : opts_.perm_words) {
      if (!text.empty()) text += ' ';
      text += word;
    }
    return parse_permutation(text);
  }

  // True for text output; throws for csv, which only tables support.
  bool text_only(std::string_view command) const {
    if (format_ == Format::Csv) unsupported_csv(command);
    return format_ == Format::Text;
  }

  [[noreturn]] static void unsupported_csv(std::string_view command) {
    throw ParseError("csv output is only available for table, not " +
                     std::string(command));
  }

  static std::size_t need(const std::optional<std::size_t>& value,
                          std::string_view flag) {
    if (!value) throw ParseError("missing " + std::string(flag));
    return *value;
  }

  std::pair<std::size_t, std::size_t> need_nk(json& input) const {
    const std::size_t n = need(opts_.n, "--n");
    const std::size_t k = need(opts_.k, "--k");
    input["n"] = n;
    input["k"] = k;
    return {n, k};
  }

  static std::string pick_method(const std::string& requested,
                                 const std::string& fallback,
                                 std::initializer_list<std::string_view> allowed) {
    const std::string method = requested.empty() ? fallback : requested;
    if (std::find(allowed.begin(), allowed.end(), method) == allowed.end()) {
      std::string list;
      for (auto a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
      throw ParseError("method \"" + method + "\" not available here; use " +
                       list);
    }
    return method;
  }

  void emit(std::string_view command, const json& input, const json& result) {
    out_ << json{{"command", command}, {"input", input}, {"result", result}}
                .dump()
         << '\n';
  }

  const Options& opts_;
  std::ostream& out_;
  Format format_ = Format::Text;
  BruteForceOptions brute_;
};

void add_perm_arg(CLI::App* sub, Options& opts) {
  sub->add_option("perm", opts.perm_words,
                  "permutation, e.g. \"3 5 2 4 1\" or 3,5,2,4,1")
      ->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Stack sorting, 2-stack sortable permutations and "
               "beta(1,0)-trees",
               "twostack"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opts;
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", opts.jobs, "worker threads for exhaustive search");

  auto* sort = app.add_subcommand("sort", "apply the stack-sorting operator");
  add_perm_arg(sort, opts);
  sort->add_option("--passes", opts.passes, "number of passes");

  auto* sortable = app.add_subcommand("sortable", "test t-stack sortability");
  add_perm_arg(sortable, opts);
  sortable->add_option("--t", opts.sortable_passes, "number of passes");

  auto* stats = app.add_subcommand("stats", "descents, runs, rl maxima, type");
  add_perm_arg(stats, opts);

  auto* pattern = app.add_subcommand("pattern", "pattern containment");
  add_perm_arg(pattern, opts);
  pattern->add_option("--q", opts.pattern, "pattern")->required();

  auto* fmap = app.add_subcommand("fmap", "reduce a type 1 permutation");
  add_perm_arg(fmap, opts);

  auto* finv = app.add_subcommand("finv", "expand a marked permutation");
  add_perm_arg(finv, opts);
  finv->add_option("--mark", opts.mark, "rank of the marked rl maximum")
      ->required();

  auto* count = app.add_subcommand("count", "count w|trees|maps|catalan|total");
  count->add_option("what", opts.count_what, "quantity")->required();
  count->add_option("--n", opts.n);
  count->add_option("--k", opts.k);
  count->add_option("--f", opts.f);
  count->add_option("--pv", opts.pv);
  count->add_option("--method", opts.method, "formula|brute|enum|memo|auto");

  auto* table = app.add_subcommand("table", "W(n,k) for all k");
  table->add_option("--n", opts.n)->required();
  table->add_option("--method", opts.method, "formula|brute");

  auto* enumerate =
      app.add_subcommand("enumerate", "stream objects in canonical order");
  enumerate->require_subcommand(1);
  auto* perms = enumerate->add_subcommand("perms", "n-permutations");
  perms->add_option("--n", opts.n)->required();
  perms->add_option("--runs", opts.runs);
  perms->add_option("--filter", opts.filter, "1ss|2ss");
  auto* trees = enumerate->add_subcommand("trees", "beta(1,0)-trees");
  trees->add_option("--n", opts.n, "trees on n+1 nodes");
  trees->add_option("--nodes", opts.nodes);
  trees->add_option("--leaves", opts.leaves);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", opts.suite, "suite name or all")->required();
  verify->add_option("--max-n", opts.max_n);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    Invocation inv(opts, out);
    if (*sort) return inv.sort();
    if (*sortable) return inv.sortable();
    if (*stats) return inv.stats();
    if (*pattern) return inv.pattern();
    if (*fmap) return inv.fmap();
    if (*finv) return inv.finv();
    if (*count) return inv.count();
    if (*table) return inv.table();
    if (*perms) return inv.enumerate_perms();
    if (*trees) return inv.enumerate_trees();
    if (*verify) return inv.verify();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
  err << "error: no command given\n";
  return kExitInvalidInput;
}

}  // namespace twostack::cli
