#pragma once

#include <cstddef>
#include <vector>

#include "mspit/rooted_tree.hpp"

namespace mspit {

struct BudgetProbe {
  std::size_t budget = 0;
  Length value = 0;
};

struct BudgetResult {
  // Smallest number of upgrades whose optimum reaches the target.
  std::size_t min_budget = 0;
  // Witness: an optimal solution at min_budget; its value is >= the target.
  Solution solution;
  Length target = 0;
  // Budget interval the search started from.
  std::size_t lower = 0;
  std::size_t upper = 0;
  // Solver calls in the order they were made.
  std::vector<BudgetProbe> probes;
};

// Smallest budget K such that the best achievable shortest root-leaf distance
// with K upgrades is at least `target`. Binary search over [0, non-leaf
// count], keeping best(lo) < target <= best(hi); one DP solve per probe.
// Throws TargetUnreachable when even upgrading everything falls short.
BudgetResult solve_mcspit(const RootedTree& tree, Length target);

}  // namespace mspit
