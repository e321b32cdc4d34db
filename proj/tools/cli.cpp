#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "bench.hpp"
#include "json.hpp"
#include "mspit/budget_search.hpp"
#include "mspit/decomposition.hpp"
#include "mspit/error.hpp"
#include "mspit/instance_io.hpp"
#include "mspit/testkit.hpp"
#include "mspit/tree_dp.hpp"

namespace mspit::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string format = "text";
  bool no_timing = false;
  int scale_digits = 0;
};

// An input problem worth exit code 2, already phrased for the user.
struct InputError {
  std::string message;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    const auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

double round_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

Json length_json(Length value, int digits) {
  return digits > 0 ? Json(format_length(value, digits)) : Json(value);
}

Json digest(const RootedTree& tree) {
  return Json{{"nodes", tree.size()},
              {"leaves", tree.leaves().size()},
              {"non_leaves", tree.upgradable_count()}};
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += scalar_text(v[i]);
    }
    return s + "]";
  }
  return v.dump();
}

bool is_table(const Json& v) { return v.is_array() && !v.empty() && v.front().is_object(); }

void render_table(const std::string& name, const Json& rows, std::ostream& out) {
  std::vector<std::string> columns;
  for (const auto& [key, _] : rows.front().items()) columns.push_back(key);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.size());
  for (const Json& row : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      line.push_back(scalar_text(row.at(columns[i])));
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << "  ";
      if (i + 1 == line.size()) {
        out << line[i];
      } else {
        out << std::left << std::setw(static_cast<int>(width[i])) << line[i];
      }
    }
    out << '\n';
  };
  out << "# " << name << '\n';
  emit(columns);
  for (const auto& line : cells) emit(line);
}

void render_text(const Json& report, std::ostream& out, const std::string& prefix = "") {
  for (const auto& [key, value] : report.items()) {
    if (key == "summary" || is_table(value)) continue;
    if (value.is_object()) {
      render_text(value, out, prefix + key + ".");
    } else {
      out << prefix << key << '=' << scalar_text(value) << '\n';
    }
  }
  for (const auto& [key, value] : report.items()) {
    if (is_table(value)) render_table(prefix + key, value, out);
  }
  if (prefix.empty() && report.contains("summary")) {
    out << report["summary"].get<std::string>() << '\n';
  }
}

void emit(const Json& report, const Common& common, std::ostream& out) {
  if (common.format == "json") {
    out << report.dump(2) << '\n';
  } else {
    render_text(report, out);
  }
}

RootedTree load(const std::string& path, const Common& common) {
  try {
    return load_tree(path, common.scale_digits);
  } catch (const Error& e) {
    throw InputError{path + ": " + e.what()};
  }
}

std::vector<Label> upgraded_labels(const RootedTree& tree, const Solution& s) {
  return s.upgraded.labels(tree);
}

Length parse_target(const std::string& text, const Common& common) {
  try {
    return parse_length(text, common.scale_digits);
  } catch (const Error& e) {
    throw InputError{std::string("--target: ") + e.what()};
  }
}

int cmd_solve_max(const std::string& input, std::size_t budget, const Common& common,
                  std::ostream& out) {
  const RootedTree tree = load(input, common);
  const Stopwatch clock;
  const Solution s = solve_mspit(tree, budget);
  const double ms = clock.elapsed_ms();

  Json report;
  report["command"] = "solve-max";
  report["input"] = input;
  report["instance"] = digest(tree);
  report["budget"] = budget;
  report["value"] = length_json(s.value, common.scale_digits);
  report["upgraded"] = upgraded_labels(tree, s);
  if (!common.no_timing) report["time_ms"] = round_ms(ms);
  emit(report, common, out);
  return kExitOk;
}

int cmd_solve_cost(const std::string& input, const std::string& target_text,
                   const Common& common, std::ostream& out, std::ostream& err) {
  const RootedTree tree = load(input, common);
  const Length target = parse_target(target_text, common);

  Json report;
  report["command"] = "solve-cost";
  report["input"] = input;
  report["instance"] = digest(tree);
  report["target"] = length_json(target, common.scale_digits);
  const Stopwatch clock;
  try {
    const BudgetResult r = solve_mcspit(tree, target);
    const double ms = clock.elapsed_ms();
    report["kstar"] = r.min_budget;
    report["value"] = length_json(r.solution.value, common.scale_digits);
    report["upgraded"] = upgraded_labels(tree, r.solution);
    report["probes"] = r.probes.size();
    if (!common.no_timing) report["time_ms"] = round_ms(ms);
    emit(report, common, out);
    return kExitOk;
  } catch (const TargetUnreachable& e) {
    report["error"] = "unreachable: ceiling " + format_length(e.ceiling(), common.scale_digits);
    report["ceiling"] = length_json(e.ceiling(), common.scale_digits);
    emit(report, common, out);
    err << "error: " << report["error"].get<std::string>() << '\n';
    return kExitUnreachable;
  }
}

struct VerifyRequest {
  std::optional<std::size_t> budget;
  std::optional<std::string> target;
  bool all_budgets = false;
};

int cmd_verify(const std::string& input, const VerifyRequest& req, const Common& common,
               std::ostream& out, std::ostream& err) {
  const RootedTree tree = load(input, common);
  if (tree.upgradable_count() > testkit::kOracleLimit) {
    throw InputError{input + ": " + std::to_string(tree.upgradable_count()) +
                     " non-leaf nodes exceed the oracle limit of " +
                     std::to_string(testkit::kOracleLimit)};
  }
  const int digits = common.scale_digits;
  Json report;
  report["command"] = "verify";
  report["input"] = input;
  report["instance"] = digest(tree);
  bool match = true;

  if (req.all_budgets) {
    const Decomposition d = decompose(tree);
    Json rows = Json::array();
    for (std::size_t k = 0; k <= tree.upgradable_count(); ++k) {
      const Length dp = solve_mspit(tree, d, k).value;
      const Length oracle = testkit::brute_force_mspit(tree, k).value;
      match = match && dp == oracle;
      rows.push_back({{"budget", k},
                      {"dp", length_json(dp, digits)},
                      {"oracle", length_json(oracle, digits)},
                      {"status", dp == oracle ? "MATCH" : "MISMATCH"}});
    }
    report["budgets"] = std::move(rows);
    report["summary"] = match ? "MATCH" : "MISMATCH";
  } else if (req.budget) {
    const Solution s = solve_mspit(tree, *req.budget);
    const Length oracle = testkit::brute_force_mspit(tree, *req.budget).value;
    match = s.value == oracle;
    report["budget"] = *req.budget;
    report["dp"] = length_json(s.value, digits);
    report["oracle"] = length_json(oracle, digits);
    report["summary"] = "dp=" + format_length(s.value, digits) +
                        " oracle=" + format_length(oracle, digits) +
                        (match ? " MATCH" : " MISMATCH");
  } else {
    const Length target = parse_target(*req.target, common);
    report["target"] = length_json(target, digits);
    std::string dp_text, oracle_text;
    try {
      dp_text = std::to_string(solve_mcspit(tree, target).min_budget);
    } catch (const TargetUnreachable&) {
      dp_text = "unreachable";
    }
    try {
      oracle_text = std::to_string(testkit::brute_force_mcspit(tree, target));
    } catch (const TargetUnreachable&) {
      oracle_text = "unreachable";
    }
    match = dp_text == oracle_text;
    report["dp"] = dp_text;
    report["oracle"] = oracle_text;
    report["summary"] = "dp=" + dp_text + " oracle=" + oracle_text + (match ? " MATCH" : " MISMATCH");
  }
  report["status"] = match ? "MATCH" : "MISMATCH";
  emit(report, common, out);
  if (!match) {
    err << "error: solver and oracle disagree\n";
    return kExitMismatch;
  }
  return kExitOk;
}

struct GenRequest {
  testkit::GeneratorConfig config;
  std::string shape = "uniform-attachment";
  std::string output;
};

int cmd_gen(GenRequest req, const Common& common, std::ostream& out) {
  const auto shape = testkit::parse_shape(req.shape);
  if (!shape) throw InputError{"unknown shape '" + req.shape + "'"};
  req.config.shape = *shape;
  if (req.config.nodes < 2) throw InputError{"--nodes must be at least 2"};
  if (req.config.w_max < 0 || req.config.delta_max < 0) {
    throw InputError{"--wmax and --dmax must be non-negative"};
  }
  const RootedTree tree = testkit::random_tree(req.config);
  if (req.output.empty()) {
    write_instance(out, tree);
    return kExitOk;
  }
  std::ofstream file(req.output, std::ios::binary);
  if (!file) throw InputError{"cannot write " + req.output};
  write_instance(file, tree);

  Json report;
  report["command"] = "gen";
  report["output"] = req.output;
  report["nodes"] = req.config.nodes;
  report["seed"] = req.config.seed;
  report["shape"] = req.shape;
  report["wmax"] = req.config.w_max;
  report["dmax"] = req.config.delta_max;
  report["instance"] = digest(tree);
  emit(report, common, out);
  return kExitOk;
}

struct BenchRequest {
  std::vector<std::size_t> sizes;
  std::size_t trials = 3;
  std::uint64_t seed = 1;
  std::string rule = "tenth";
  std::string shape = "uniform-attachment";
};

int cmd_bench(const BenchRequest& req, const Common& common, std::ostream& out) {
  bench::BenchConfig config;
  config.sizes = req.sizes;
  config.trials = req.trials;
  config.seed = req.seed;
  const auto shape = testkit::parse_shape(req.shape);
  if (!shape) throw InputError{"unknown shape '" + req.shape + "'"};
  config.shape = *shape;
  std::vector<bench::BenchRow> rows;
  try {
    config.rule = bench::BudgetRule::parse(req.rule);
    rows = bench::run(config);
  } catch (const std::invalid_argument& e) {
    throw InputError{e.what()};
  }

  Json report;
  report["command"] = "bench";
  report["sizes"] = req.sizes;
  report["trials"] = req.trials;
  report["seed"] = req.seed;
  report["budget_rule"] = config.rule.describe();
  report["target_rule"] = "midpoint";
  report["shape"] = req.shape;
  Json table = Json::array();
  for (const bench::BenchRow& r : rows) {
    Json row;
    row["n"] = r.nodes;
    row["budget"] = r.budget;
    if (!common.no_timing) {
      row["max_avg_ms"] = round_ms(r.max_distance.avg_ms);
      row["max_max_ms"] = round_ms(r.max_distance.max_ms);
      row["max_min_ms"] = round_ms(r.max_distance.min_ms);
      row["cost_avg_ms"] = round_ms(r.min_budget.avg_ms);
      row["cost_max_ms"] = round_ms(r.min_budget.max_ms);
      row["cost_min_ms"] = round_ms(r.min_budget.min_ms);
    }
    row["values"] = r.values;
    row["targets"] = r.targets;
    row["kstars"] = r.min_budgets;
    table.push_back(std::move(row));
  }
  report["rows"] = std::move(table);
  emit(report, common, out);
  return kExitOk;
}

int cmd_inspect(const std::string& input, const Common& common, std::ostream& out) {
  const RootedTree tree = load(input, common);
  const Decomposition d = decompose(tree);
  auto labels = [&](const std::vector<NodeIndex>& nodes) {
    std::vector<Label> l;
    for (NodeIndex v : nodes) l.push_back(tree.label(v));
    return l;
  };

  Json report;
  report["command"] = "inspect";
  report["input"] = input;
  report["instance"] = digest(tree);
  report["order"] = labels(d.order);

  Json nodes = Json::array();
  for (NodeIndex v = 0; v < tree.size(); ++v) {
    nodes.push_back({{"node", tree.label(v)},
                     {"parent", v == tree.root() ? Json(nullptr) : Json(tree.label(tree.parent(v)))},
                     {"degree", tree.degree(v)},
                     {"layer", d.layers.node[v]},
                     {"edge_layer", v == tree.root() ? Json(nullptr) : Json(d.layers.edge[v])}});
  }
  report["nodes"] = std::move(nodes);

  Json chains = Json::array();
  for (NodeIndex j : d.order) {
    for (NodeIndex h : d.descendants(j)) {
      const Chain& c = d.chain(h);
      std::vector<Label> owners;
      std::vector<Json> deltas;
      for (std::size_t i = 1; i < c.beta(); ++i) {
        owners.push_back(tree.label(c.owners[i]));
        deltas.push_back(length_json(c.deltas[i], common.scale_digits));
      }
      chains.push_back({{"top", tree.label(c.top)},
                        {"bottom", tree.label(c.bottom)},
                        {"beta", c.beta()},
                        {"base_sum", length_json(c.base_sum, common.scale_digits)},
                        {"head_delta", length_json(c.head_delta(), common.scale_digits)},
                        {"tail_owners", owners},
                        {"tail_deltas", deltas}});
    }
  }
  report["chains"] = std::move(chains);
  emit(report, common, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum shortest-path interdiction on trees by node upgrades", "mspit"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-timing", common.no_timing, "Omit wall-clock fields from reports");
  app.add_option("--scale-digits", common.scale_digits,
                 "Accept lengths with up to this many fractional digits")
      ->check(CLI::Range(0, 12));

  std::string input;
  std::size_t budget = 0;
  std::string target;

  auto* solve_max = app.add_subcommand("solve-max", "Best distance within a budget");
  solve_max->add_option("input", input, "Instance file")->required();
  solve_max->add_option("--budget,-k", budget, "Number of node upgrades")->required();

  auto* solve_cost = app.add_subcommand("solve-cost", "Fewest upgrades reaching a target");
  solve_cost->add_option("input", input, "Instance file")->required();
  solve_cost->add_option("--target,-d", target, "Target shortest distance")->required();

  VerifyRequest verify_req;
  std::size_t verify_budget = 0;
  std::string verify_target;
  auto* verify = app.add_subcommand("verify", "Cross-check the solver against brute force");
  verify->add_option("input", input, "Instance file")->required();
  auto* vb = verify->add_option("--budget,-k", verify_budget, "Budget to check");
  auto* vt = verify->add_option("--target,-d", verify_target, "Target to check");
  auto* va = verify->add_flag("--all-budgets", verify_req.all_budgets, "Check every budget");
  vb->excludes(vt)->excludes(va);
  vt->excludes(va);

  GenRequest gen_req;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--nodes,-n", gen_req.config.nodes, "Node count")->required();
  gen->add_option("--seed,-s", gen_req.config.seed, "Random seed");
  gen->add_option("--wmax", gen_req.config.w_max, "Largest base length");
  gen->add_option("--dmax", gen_req.config.delta_max, "Largest upgrade increment");
  gen->add_option("--shape", gen_req.shape,
                  "uniform-attachment, caterpillar, broom or binary-ish");
  gen->add_option("--output,-o", gen_req.output, "Write the instance here instead of stdout");

  BenchRequest bench_req;
  auto* bench_cmd = app.add_subcommand("bench", "Time both solvers on random instances");
  bench_cmd->add_option("--sizes", bench_req.sizes, "Ascending node counts")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--trials", bench_req.trials, "Instances per size");
  bench_cmd->add_option("--seed", bench_req.seed, "Base seed");
  bench_cmd->add_option("--budget-rule", bench_req.rule, "tenth or fixed:K");
  bench_cmd->add_option("--shape", bench_req.shape, "Generator shape");

  auto* inspect = app.add_subcommand("inspect", "Print layers and chains");
  inspect->add_option("input", input, "Instance file")->required();

  std::vector<const char*> argv{"mspit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*solve_max) return cmd_solve_max(input, budget, common, out);
    if (*solve_cost) return cmd_solve_cost(input, target, common, out, err);
    if (*verify) {
      if (!*vb && !*vt && !verify_req.all_budgets) {
        throw InputError{"verify needs one of --budget, --target or --all-budgets"};
      }
      if (*vb) verify_req.budget = verify_budget;
      if (*vt) verify_req.target = verify_target;
      return cmd_verify(input, verify_req, common, out, err);
    }
    if (*gen) return cmd_gen(gen_req, common, out);
    if (*bench_cmd) return cmd_bench(bench_req, common, out);
    if (*inspect) return cmd_inspect(input, common, out);
  } catch (const InputError& e) {
    err << "error: " << e.message << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace mspit::cli
