// Standalone acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "cli.hpp"
#include "fixtures.hpp"
#include "mspit/budget_search.hpp"
#include "mspit/error.hpp"
#include "mspit/instance_io.hpp"
#include "mspit/testkit.hpp"
#include "mspit/tree_dp.hpp"

using namespace mspit;
using testkit::GeneratorConfig;
using testkit::Shape;

namespace {

constexpr Shape kShapes[] = {Shape::kUniformAttachment, Shape::kCaterpillar, Shape::kBroom,
                             Shape::kBinaryIsh};

// Collects the first few failures of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (notes_.size() < 3) notes_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string notes() const {
    std::string s;
    for (const auto& n : notes_) s += "; " + n;
    if (failures_ > notes_.size()) s += "; ...";
    return s;
  }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome finish(Check& check, std::string detail, double seconds, double limit) {
  check.expect(seconds < limit, "took longer than " + std::to_string(limit) + "s");
  return {check.ok(), detail + check.notes()};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// The small-tree battery shared by the oracle criteria.
std::vector<RootedTree> small_trees() {
  std::vector<RootedTree> trees;
  for (std::uint64_t i = 0; i < 528; ++i) {
    GeneratorConfig g;
    g.shape = kShapes[i % 4];
    g.nodes = 2 + (i / 4) % 11;
    g.seed = 9000 + i;
    g.w_max = i % 3 == 0 ? 5 : 100;  // small ranges force ties
    g.delta_max = i % 3 == 0 ? 5 : 100;
    trees.push_back(testkit::random_tree(g));
  }
  return trees;
}

Outcome worked_example() {
  const auto start = std::chrono::steady_clock::now();
  Check check;
  const RootedTree t = fixtures::ex1();
  const Decomposition d = decompose(t);
  auto at = [&](Label l) { return fixtures::node(t, l); };

  const Solution s = solve_mspit(t, 1);
  check.expect(s.value == 13, "K=1 value " + std::to_string(s.value));
  check.expect(s.upgraded.labels(t) == std::vector<Label>{1}, "K=1 set is not {1}");

  struct ChainCell {
    Label bottom;
    bool top;
    std::size_t k;
    Length g;
  };
  const ChainCell chain_cells[] = {
      {3, false, 0, 7},  {3, true, 1, 10},  {4, false, 0, 4},  {4, true, 1, 10},
      {2, false, 0, 6},  {2, true, 1, 10},  {6, false, 0, 9},  {6, false, 1, 11},
      {6, true, 1, 18},  {6, true, 2, 20},  {8, false, 0, 3},  {8, true, 1, 10},
      {10, false, 0, 9}, {10, false, 1, 14}, {10, true, 1, 15}, {10, true, 2, 20},
      {7, false, 0, 4},  {7, true, 1, 10},
  };
  for (const ChainCell& c : chain_cells) {
    const ChainTable table(d.chain(at(c.bottom)), 2);
    check.expect(table.value(c.top, c.k) == c.g, "chain cell at " + std::to_string(c.bottom));
  }

  struct DpCell {
    Label junction;
    std::size_t branch;
    bool top;
    std::size_t k;
    Length value;
  };
  const TreeDp dp(t, d, 1, {.keep_values = true});
  // Prefix of v7 through both branches, v1's third branch alone, and v1's
  // prefix through all three.
  const DpCell prefix_cells[] = {
      {7, 1, false, 0, 3}, {7, 1, false, 1, 3}, {7, 1, true, 1, 10},
      {1, 2, false, 0, 7}, {1, 2, false, 1, 9}, {1, 2, true, 1, 13},
      {1, 1, false, 1, 9},
  };
  for (const DpCell& c : prefix_cells) {
    check.expect(dp.prefix_value(at(c.junction), c.branch, c.top, c.k) == c.value,
                 "prefix cell at " + std::to_string(c.junction));
  }
  const DpCell branch_cells[] = {
      {1, 2, false, 0, 10}, {1, 2, false, 1, 16}, {1, 2, true, 1, 14},
  };
  for (const DpCell& c : branch_cells) {
    check.expect(dp.branch_value(at(c.junction), c.branch, c.top, c.k) == c.value,
                 "branch cell at " + std::to_string(c.junction));
  }

  const double secs = seconds_since(start);
  const std::size_t cells = std::size(chain_cells) + std::size(prefix_cells) + std::size(branch_cells);
  return finish(check,
                "K=1 -> 13 {1}, " + std::to_string(cells) + " table cells, " + fmt_seconds(secs),
                secs, 1.0);
}

Outcome oracle_battery(const std::vector<RootedTree>& trees) {
  const auto start = std::chrono::steady_clock::now();
  Check check;
  std::size_t cases = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const RootedTree& t = trees[i];
    const Decomposition d = decompose(t);
    for (std::size_t k = 0; k <= t.upgradable_count(); ++k) {
      ++cases;
      const Solution s = solve_mspit(t, d, k);
      const Length oracle = testkit::brute_force_mspit(t, k).value;
      const std::string where = "tree " + std::to_string(i) + " K=" + std::to_string(k);
      check.expect(s.value == oracle, where + " dp " + std::to_string(s.value) + " oracle " +
                                          std::to_string(oracle));
      check.expect(s.upgraded.size() <= k, where + " set too large");
      check.expect(evaluate_min_distance(t, s.upgraded) == s.value, where + " set re-evaluates");
    }
  }
  const double secs = seconds_since(start);
  return finish(check,
                std::to_string(trees.size()) + " trees, " + std::to_string(cases) +
                    " budgets, " + fmt_seconds(secs),
                secs, 60.0);
}

Outcome minimality_battery(const std::vector<RootedTree>& trees) {
  const auto start = std::chrono::steady_clock::now();
  Check check;
  std::size_t cases = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const RootedTree& t = trees[i];
    const Length low = baseline_min_distance(t);
    const Length high = all_upgraded_min_distance(t);
    std::vector<Length> targets;
    const Length span = high - low;
    for (Length j = 0; j < 10 && j <= span; ++j) {
      targets.push_back(span < 10 ? low + j : low + span * j / 9);
    }
    targets.push_back(high + 1);
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    const Decomposition d = decompose(t);
    for (Length target : targets) {
      ++cases;
      const std::string where = "tree " + std::to_string(i) + " D=" + std::to_string(target);
      bool unreachable = false;
      BudgetResult r;
      try {
        r = solve_mcspit(t, target);
      } catch (const TargetUnreachable&) {
        unreachable = true;
      }
      check.expect(unreachable == (target > high), where + " reachability");
      if (unreachable) continue;
      check.expect(r.solution.value >= target, where + " value below target");
      check.expect(evaluate_min_distance(t, r.solution.upgraded) >= target, where + " set");
      if (r.min_budget > 0) {
        check.expect(solve_mspit(t, d, r.min_budget - 1).value < target, where + " not minimal");
      }
      check.expect(testkit::brute_force_mcspit(t, target) == r.min_budget, where + " oracle");
    }
  }
  const double secs = seconds_since(start);
  return finish(check,
                std::to_string(trees.size()) + " trees, " + std::to_string(cases) +
                    " targets, " + fmt_seconds(secs),
                secs, 60.0);
}

Outcome monotone_values() {
  const auto start = std::chrono::steady_clock::now();
  Check check;
  for (std::uint64_t i = 0; i < 50; ++i) {
    GeneratorConfig g;
    g.shape = kShapes[i % 4];
    g.nodes = 20 + (i * 37) % 181;
    g.seed = 500 + i;
    const RootedTree t = testkit::random_tree(g);
    const std::size_t m = t.upgradable_count();
    const Decomposition d = decompose(t);
    const TreeDp dp(t, d, m);
    const std::vector<Length>& values = dp.root_values();
    const std::string where = "tree " + std::to_string(i);
    check.expect(values.size() == m + 1, where + " value count");
    for (std::size_t k = 1; k < values.size(); ++k) {
      check.expect(values[k - 1] <= values[k], where + " drops at K=" + std::to_string(k));
    }
    check.expect(values.back() == all_upgraded_min_distance(t), where + " misses the ceiling");
  }
  const double secs = seconds_since(start);
  return finish(check, "50 trees up to 200 nodes, " + fmt_seconds(secs), secs, 30.0);
}

Outcome scaling() {
  Check check;
  bench::BenchConfig config;
  config.sizes = {100, 500, 1000, 2000, 3000};
  config.trials = 3;
  config.seed = 1;
  const auto rows = bench::run(config);
  std::string detail = "mspit/mcspit avg ms:";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    char buf[96];
    std::snprintf(buf, sizeof buf, " n=%zu %.2f/%.2f", r.nodes, r.max_distance.avg_ms,
                  r.min_budget.avg_ms);
    detail += buf;
    const std::string where = "n=" + std::to_string(r.nodes);
    check.expect(r.max_distance.max_ms < 120000.0, where + " over 120s");
    check.expect(r.min_budget.avg_ms > r.max_distance.avg_ms, where + " mcspit not slower");
    if (i > 0) {
      check.expect(rows[i - 1].max_distance.avg_ms <= r.max_distance.avg_ms,
                   where + " mspit faster than the smaller size");
    }
  }
  return {check.ok(), detail + check.notes()};
}

Outcome determinism() {
  Check check;
  const std::string ex1 = std::string(MSPIT_TEST_DATA) + "/ex1.txt";
  const auto dir = std::filesystem::temp_directory_path() / "mspit_acceptance";
  std::filesystem::create_directories(dir);
  const std::string generated = (dir / "gen.txt").string();
  const std::vector<std::vector<std::string>> commands = {
      {"gen", "--nodes", "200", "--seed", "11", "--shape", "broom"},
      {"gen", "--nodes", "200", "--seed", "11", "-o", generated},
      {"solve-max", ex1, "--budget", "2"},
      {"solve-max", generated, "--budget", "20"},
      {"solve-cost", ex1, "--target", "18"},
      {"solve-cost", ex1, "--target", "21"},
      {"verify", ex1, "--all-budgets"},
      {"verify", ex1, "--target", "14"},
      {"inspect", generated},
      {"bench", "--sizes", "50,100", "--trials", "2", "--seed", "4"},
  };
  std::size_t runs = 0;
  for (const auto& base : commands) {
    for (const char* format : {"text", "json"}) {
      std::vector<std::string> args = base;
      args.insert(args.end(), {"--format", format, "--no-timing"});
      std::string first_out, first_err;
      int first_code = 0;
      for (int rep = 0; rep < 3; ++rep) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        ++runs;
        if (rep == 0) {
          first_out = out.str();
          first_err = err.str();
          first_code = code;
          continue;
        }
        check.expect(code == first_code && out.str() == first_out && err.str() == first_err,
                     base.front() + " output differs between runs");
      }
    }
  }
  return {check.ok(), std::to_string(commands.size()) + " commands x 2 formats, " +
                          std::to_string(runs) + " runs" + check.notes()};
}

}  // namespace

int main() {
  const std::vector<RootedTree> trees = small_trees();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"worked example", worked_example},
      {"oracle agreement", [&] { return oracle_battery(trees); }},
      {"minimum budget", [&] { return minimality_battery(trees); }},
      {"monotone in budget", monotone_values},
      {"scaling", scaling},
      {"determinism", determinism},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, body] : criteria) {
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", index++, name.c_str(),
                o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
