#include "mspit/tree_dp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mspit {

TreeDp::TreeDp(const RootedTree& tree, const Decomposition& decomposition, std::size_t budget,
               DpOptions options)
    : tree_(&tree),
      decomposition_(&decomposition),
      budget_(std::min(budget, tree.upgradable_count())),
      options_(options),
      tables_(tree.size()) {
  for (NodeIndex v : decomposition.order) process(v);
}

void TreeDp::process(NodeIndex v) {
  const auto& descendants = decomposition_->descendants(v);
  JunctionTables& jt = tables_[v];
  jt.branches.resize(descendants.size());

  // Values of the running prefix union of branches.
  FlagGrid<Length> prefix;
  std::size_t prefix_cap = 0;

  for (std::size_t q = 0; q < descendants.size(); ++q) {
    const NodeIndex bottom = descendants[q];
    const ChainTable chain(decomposition_->chain(bottom), budget_);
    static const std::vector<Length> kLeafBest{0};
    const std::vector<Length>& below = tree_->is_leaf(bottom) ? kLeafBest : tables_[bottom].best;
    const std::size_t below_cap = tree_->is_leaf(bottom) ? 0 : tables_[bottom].cap;
    const std::size_t branch_cap = chain.chain().beta() + below_cap;

    BranchTables& bt = jt.branches[q];
    FlagGrid<Length> branch(std::min(budget_, branch_cap), kMissing);
    bt.branch_split = FlagGrid<std::uint32_t>(branch.limit, 0);
    for (bool flag : {false, true}) {
      for (std::size_t k1 = chain.min_k(flag); k1 <= chain.max_k(flag); ++k1) {
        const Length g = chain.value(flag, k1);
        for (std::size_t k2 = 0; k2 < below.size() && k1 + k2 <= branch.limit; ++k2) {
          if (below[k2] == kMissing) continue;
          const Length candidate = g + below[k2];
          Length& slot = branch.at(flag, k1 + k2);
          if (candidate > slot) {
            slot = candidate;
            bt.branch_split.at(flag, k1 + k2) = static_cast<std::uint32_t>(k1);
          }
        }
      }
    }

    if (q == 0) {
      prefix = branch;
      prefix_cap = branch_cap;
      bt.prefix_split = FlagGrid<std::uint32_t>(prefix.limit, 0);
      for (std::size_t k = 0; k <= prefix.limit; ++k) {
        bt.prefix_split.at(false, k) = static_cast<std::uint32_t>(k);
        bt.prefix_split.at(true, k) = static_cast<std::uint32_t>(k);
      }
    } else {
      // v itself is counted by both operands, so the union has one node less.
      const std::size_t merged_cap = prefix_cap + branch_cap - 1;
      FlagGrid<Length> merged(std::min(budget_, merged_cap), kMissing);
      bt.prefix_split = FlagGrid<std::uint32_t>(merged.limit, 0);
      for (bool flag : {false, true}) {
        const std::size_t shared = flag ? 1 : 0;
        for (std::size_t k1 = shared; k1 <= branch.limit; ++k1) {
          const Length left = branch.at(flag, k1);
          if (left == kMissing) continue;
          for (std::size_t k2 = shared; k2 <= prefix.limit && k1 + k2 - shared <= merged.limit;
               ++k2) {
            const Length right = prefix.at(flag, k2);
            if (right == kMissing) continue;
            const Length candidate = std::min(left, right);
            Length& slot = merged.at(flag, k1 + k2 - shared);
            if (candidate > slot) {
              slot = candidate;
              bt.prefix_split.at(flag, k1 + k2 - shared) = static_cast<std::uint32_t>(k1);
            }
          }
        }
      }
      prefix = std::move(merged);
      prefix_cap = merged_cap;
    }

    if (options_.keep_values) {
      bt.branch_values = std::move(branch);
      bt.prefix_values = prefix;
    }
    if (!options_.keep_values && !tree_->is_leaf(bottom)) {
      std::vector<Length>().swap(tables_[bottom].best);
    }
  }

  jt.cap = prefix_cap;
  jt.best.assign(prefix.limit + 1, kMissing);
  jt.best_flag.assign(prefix.limit + 1, 0);
  for (std::size_t k = 0; k <= prefix.limit; ++k) {
    jt.best[k] = prefix.at(false, k);
    if (prefix.at(true, k) > jt.best[k]) {
      jt.best[k] = prefix.at(true, k);
      jt.best_flag[k] = 1;
    }
  }
}

Length TreeDp::value() const { return root_values()[budget_]; }

UpgradeSet TreeDp::reconstruct(std::size_t k) const {
  if (k > budget_) {
    throw std::out_of_range("budget " + std::to_string(k) + " exceeds the solved budget " +
                            std::to_string(budget_));
  }
  std::vector<NodeIndex> chosen;
  std::vector<std::pair<NodeIndex, std::size_t>> pending{{tree_->root(), k}};
  while (!pending.empty()) {
    auto [v, remaining] = pending.back();
    pending.pop_back();
    if (remaining == 0) continue;
    const JunctionTables& jt = tables_[v];
    const bool flag = jt.best_flag[remaining] != 0;
    const std::size_t shared = flag ? 1 : 0;
    if (flag) chosen.push_back(v);

    const auto& descendants = decomposition_->descendants(v);
    for (std::size_t q = descendants.size(); q-- > 0;) {
      const BranchTables& bt = jt.branches[q];
      std::size_t own = remaining;
      if (q > 0) {
        own = bt.prefix_split.at(flag, remaining);
        remaining = remaining - own + shared;
      }
      const std::size_t on_chain = bt.branch_split.at(flag, own);
      const ChainTable chain(decomposition_->chain(descendants[q]), budget_);
      for (NodeIndex u : chain.tail_nodes(flag, on_chain)) chosen.push_back(u);
      if (own > on_chain) pending.emplace_back(descendants[q], own - on_chain);
    }
  }
  return UpgradeSet(std::move(chosen));
}

Solution TreeDp::solution() const {
  Solution s = make_solution(*tree_, reconstruct());
  if (s.value != value() || s.upgraded.size() > budget_) {
    throw std::logic_error("reconstructed upgrade set evaluates to " + std::to_string(s.value) +
                           " but the tables promise " + std::to_string(value()));
  }
  return s;
}

const TreeDp::BranchTables& TreeDp::branch_tables(NodeIndex junction, std::size_t branch) const {
  if (!options_.keep_values) {
    throw std::logic_error("table inspection needs DpOptions::keep_values");
  }
  if (junction >= tables_.size() || branch >= tables_[junction].branches.size()) {
    throw std::out_of_range("no such junction branch");
  }
  return tables_[junction].branches[branch];
}

std::optional<Length> TreeDp::cell(const FlagGrid<Length>& grid, bool flag, std::size_t k) {
  if (k > grid.limit || grid.at(flag, k) == kMissing) return std::nullopt;
  return grid.at(flag, k);
}

std::optional<Length> TreeDp::branch_value(NodeIndex junction, std::size_t branch,
                                           bool top_upgraded, std::size_t k) const {
  return cell(branch_tables(junction, branch).branch_values, top_upgraded, k);
}

std::optional<Length> TreeDp::prefix_value(NodeIndex junction, std::size_t branch,
                                           bool top_upgraded, std::size_t k) const {
  return cell(branch_tables(junction, branch).prefix_values, top_upgraded, k);
}

std::optional<Length> TreeDp::subtree_value(NodeIndex junction, std::size_t k) const {
  if (!options_.keep_values && junction != tree_->root()) {
    throw std::logic_error("table inspection needs DpOptions::keep_values");
  }
  const auto& best = tables_.at(junction).best;
  if (k >= best.size() || best[k] == kMissing) return std::nullopt;
  return best[k];
}

Solution solve_mspit(const RootedTree& tree, std::size_t budget) {
  return solve_mspit(tree, decompose(tree), budget);
}

Solution solve_mspit(const RootedTree& tree, const Decomposition& decomposition,
                     std::size_t budget) {
  return TreeDp(tree, decomposition, budget).solution();
}

}  // namespace mspit
