#include "mspit/budget_search.hpp"

#include <optional>

#include "mspit/decomposition.hpp"
#include "mspit/error.hpp"
#include "mspit/tree_dp.hpp"

namespace mspit {

BudgetResult solve_mcspit(const RootedTree& tree, Length target) {
  const Length ceiling = all_upgraded_min_distance(tree);
  if (target > ceiling) throw TargetUnreachable(target, ceiling);

  const Decomposition decomposition = decompose(tree);
  BudgetResult result;
  result.target = target;
  result.lower = 0;
  result.upper = tree.upgradable_count();

  auto probe = [&](std::size_t budget) {
    Solution s = solve_mspit(tree, decomposition, budget);
    result.probes.push_back({budget, s.value});
    return s;
  };

  Solution at_zero = probe(0);
  if (at_zero.value >= target) {
    result.min_budget = 0;
    result.solution = std::move(at_zero);
    return result;
  }

  // best(lo) < target <= best(hi); hi starts at the ceiling budget, which is
  // known to reach the target without a solve.
  std::size_t lo = 0;
  std::size_t hi = result.upper;
  std::optional<Solution> at_hi;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    Solution s = probe(mid);
    if (s.value >= target) {
      hi = mid;
      at_hi = std::move(s);
    } else {
      lo = mid;
    }
  }
  result.min_budget = hi;
  result.solution = at_hi ? std::move(*at_hi) : probe(hi);
  return result;
}

}  // namespace mspit
