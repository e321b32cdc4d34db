#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "mspit/chain_table.hpp"
#include "mspit/decomposition.hpp"
#include "mspit/rooted_tree.hpp"

namespace mspit {

struct DpOptions {
  // Retain every intermediate table value for inspection. Off by default;
  // only the split choices are needed to rebuild the upgrade set.
  bool keep_values = false;
};

// Bottom-up dynamic program over the junctions of a tree.
//
// For junction v with critical descendants h_1..h_p (in decomposition order),
// branch q is the chain from v to h_q plus the whole subtree below h_q. Every
// table is indexed by a flag (is v upgraded) and an exact upgrade count k:
//
//   branch(v, q, f, k) = max over k1 + k2 = k of
//                        chain(h_q, f, k1) + subtree(h_q, k2)
//   prefix(v, 1, f, k) = branch(v, 1, f, k)
//   prefix(v, q, f, k) = max over k1 + k2 - f = k of
//                        min(branch(v, q, f, k1), prefix(v, q - 1, f, k2))
//   subtree(v, k)      = max over f of prefix(v, p, f, k)
//
// The "- f" in the prefix merge counts v's own upgrade once although it
// appears in both operands. Leaves are subtrees with subtree(leaf, 0) = 0.
// Ties go to the smaller flag, then the smaller k1.
class TreeDp {
 public:
  // Budgets above the number of non-leaf nodes are clamped to it.
  TreeDp(const RootedTree& tree, const Decomposition& decomposition, std::size_t budget,
         DpOptions options = {});

  std::size_t budget() const { return budget_; }

  // Best shortest root-leaf distance with at most budget() upgrades.
  Length value() const;
  // Best distance for every budget 0..budget().
  const std::vector<Length>& root_values() const { return tables_[tree_->root()].best; }

  // Optimal upgrade set for budget k <= budget().
  UpgradeSet reconstruct(std::size_t k) const;
  UpgradeSet reconstruct() const { return reconstruct(budget_); }

  // Optimal upgrade set with its value re-checked against the evaluator.
  Solution solution() const;

  // Number of non-leaf nodes in the subtree of `junction`.
  std::size_t capacity(NodeIndex junction) const { return tables_[junction].cap; }

  // Table inspection; these need DpOptions::keep_values. `branch` is 0-based.
  // nullopt marks an infeasible cell.
  std::optional<Length> branch_value(NodeIndex junction, std::size_t branch, bool top_upgraded,
                                     std::size_t k) const;
  std::optional<Length> prefix_value(NodeIndex junction, std::size_t branch, bool top_upgraded,
                                     std::size_t k) const;
  std::optional<Length> subtree_value(NodeIndex junction, std::size_t k) const;

 private:
  static constexpr Length kMissing = std::numeric_limits<Length>::min();

  // Two rows (top flag) over k = 0..limit.
  template <class T>
  struct FlagGrid {
    std::size_t limit = 0;
    std::vector<T> cells;

    FlagGrid() = default;
    FlagGrid(std::size_t lim, T fill) : limit(lim), cells(2 * (lim + 1), fill) {}
    T& at(bool flag, std::size_t k) { return cells[(flag ? limit + 1 : 0) + k]; }
    const T& at(bool flag, std::size_t k) const { return cells[(flag ? limit + 1 : 0) + k]; }
  };

  struct BranchTables {
    FlagGrid<std::uint32_t> branch_split;  // chain share k1
    FlagGrid<std::uint32_t> prefix_split;  // branch share k1
    FlagGrid<Length> branch_values;        // kept only with keep_values
    FlagGrid<Length> prefix_values;
  };

  struct JunctionTables {
    std::size_t cap = 0;
    std::vector<BranchTables> branches;
    std::vector<Length> best;
    std::vector<std::uint8_t> best_flag;
  };

  void process(NodeIndex junction);
  const BranchTables& branch_tables(NodeIndex junction, std::size_t branch) const;
  static std::optional<Length> cell(const FlagGrid<Length>& grid, bool flag, std::size_t k);

  const RootedTree* tree_;
  const Decomposition* decomposition_;
  std::size_t budget_;
  DpOptions options_;
  std::vector<JunctionTables> tables_;
};

// Maximises the shortest root-leaf distance with at most `budget` node
// upgrades.
Solution solve_mspit(const RootedTree& tree, std::size_t budget);
Solution solve_mspit(const RootedTree& tree, const Decomposition& decomposition,
                     std::size_t budget);

}  // namespace mspit
