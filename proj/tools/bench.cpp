#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "mspit/budget_search.hpp"
#include "mspit/tree_dp.hpp"

namespace mspit::bench {

namespace {

TimeStats summarize(const std::vector<double>& samples) {
  TimeStats s;
  s.min_ms = *std::min_element(samples.begin(), samples.end());
  s.max_ms = *std::max_element(samples.begin(), samples.end());
  double total = 0;
  for (double x : samples) total += x;
  s.avg_ms = total / static_cast<double>(samples.size());
  return s;
}

template <class F>
double time_ms(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

BudgetRule BudgetRule::parse(const std::string& text) {
  if (text == "tenth") return {};
  const std::string prefix = "fixed:";
  if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
    const std::string digits = text.substr(prefix.size());
    if (digits.find_first_not_of("0123456789") == std::string::npos) {
      return {Kind::kFixed, static_cast<std::size_t>(std::stoull(digits))};
    }
  }
  throw std::invalid_argument("budget rule must be 'tenth' or 'fixed:K', got '" + text + "'");
}

std::size_t BudgetRule::budget_for(std::size_t nodes) const {
  return kind == Kind::kFixed ? fixed : (nodes + 9) / 10;
}

std::string BudgetRule::describe() const {
  return kind == Kind::kFixed ? "fixed:" + std::to_string(fixed) : "tenth";
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t nodes, std::size_t trial) {
  return seed * 1000003ull + static_cast<std::uint64_t>(nodes) * 1009ull + trial;
}

Length midpoint_target(const RootedTree& tree) {
  const Length low = baseline_min_distance(tree);
  const Length high = all_upgraded_min_distance(tree);
  return low + (high - low) / 2;
}

std::vector<BenchRow> run(const BenchConfig& config) {
  if (config.sizes.empty()) throw std::invalid_argument("no sizes given");
  if (!std::is_sorted(config.sizes.begin(), config.sizes.end())) {
    throw std::invalid_argument("sizes must be in ascending order");
  }
  if (config.sizes.front() < 2) throw std::invalid_argument("sizes must be at least 2");
  if (config.trials == 0) throw std::invalid_argument("trials must be positive");

  std::vector<BenchRow> rows;
  for (std::size_t n : config.sizes) {
    BenchRow row;
    row.nodes = n;
    row.trials = config.trials;
    row.budget = config.rule.budget_for(n);
    std::vector<double> forward, inverse;
    for (std::size_t t = 0; t < config.trials; ++t) {
      testkit::GeneratorConfig gen;
      gen.nodes = n;
      gen.seed = trial_seed(config.seed, n, t);
      gen.w_max = config.w_max;
      gen.delta_max = config.delta_max;
      gen.shape = config.shape;
      const RootedTree tree = testkit::random_tree(gen);
      const Length target = midpoint_target(tree);

      Length value = 0;
      forward.push_back(time_ms([&] { value = solve_mspit(tree, row.budget).value; }));
      std::size_t k_star = 0;
      inverse.push_back(time_ms([&] { k_star = solve_mcspit(tree, target).min_budget; }));
      row.values.push_back(value);
      row.targets.push_back(target);
      row.min_budgets.push_back(k_star);
    }
    row.max_distance = summarize(forward);
    row.min_budget = summarize(inverse);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mspit::bench
