#pragma once

#include <vector>

#include "mspit/rooted_tree.hpp"

namespace mspit::fixtures {

// The 10-node worked example. Leaves are 3, 4, 6, 8 and 10; junctions are
// 1, 2 and 7.
inline std::vector<EdgeRecord> ex1_records() {
  return {
      {2, 1, 6, 10}, {3, 2, 7, 10}, {4, 2, 4, 10}, {5, 1, 1, 10}, {6, 5, 8, 10},
      {7, 1, 4, 10}, {8, 7, 3, 10}, {9, 7, 4, 10}, {10, 9, 5, 10},
  };
}

inline RootedTree ex1() {
  const auto records = ex1_records();
  return RootedTree::build(records, 1);
}

inline NodeIndex node(const RootedTree& tree, Label label) { return tree.index_of(label); }

inline UpgradeSet labels(const RootedTree& tree, std::vector<Label> ids) {
  return UpgradeSet::from_labels(tree, ids);
}

}  // namespace mspit::fixtures
