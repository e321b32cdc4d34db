#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mspit/rooted_tree.hpp"
#include "mspit/testkit.hpp"

namespace mspit::bench {

// How the budget for each instance is chosen.
struct BudgetRule {
  enum class Kind { kTenth, kFixed } kind = Kind::kTenth;
  std::size_t fixed = 0;

  // "tenth" (ceil(n / 10)) or "fixed:K".
  static BudgetRule parse(const std::string& text);
  std::size_t budget_for(std::size_t nodes) const;
  std::string describe() const;
};

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::size_t trials = 3;
  std::uint64_t seed = 1;
  BudgetRule rule;
  testkit::Shape shape = testkit::Shape::kUniformAttachment;
  Length w_max = 100;
  Length delta_max = 100;
};

struct TimeStats {
  double avg_ms = 0;
  double max_ms = 0;
  double min_ms = 0;
};

// One row per size: timings of both solvers over `trials` instances, plus
// the results themselves so that runs can be compared for determinism.
struct BenchRow {
  std::size_t nodes = 0;
  std::size_t trials = 0;
  std::size_t budget = 0;
  TimeStats max_distance;  // solve_mspit
  TimeStats min_budget;    // solve_mcspit
  std::vector<Length> values;
  std::vector<Length> targets;
  std::vector<std::size_t> min_budgets;
};

// Seed of trial `t` at size `n`; instances are reproducible from the config.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t nodes, std::size_t trial);

// Target for the min-budget solver: midpoint of [baseline, ceiling].
Length midpoint_target(const RootedTree& tree);

// Throws std::invalid_argument if sizes are empty, unsorted or below 2, or
// trials is zero.
std::vector<BenchRow> run(const BenchConfig& config);

}  // namespace mspit::bench
