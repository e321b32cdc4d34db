#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <unordered_map>
#include <vector>

namespace mspit {

// Edge lengths and distances. Integral so that min/max comparisons are exact.
using Length = std::int64_t;
// External node identifier as it appears in instance files.
using Label = std::int64_t;
// Dense internal node index in [0, n). Indices are assigned in ascending label
// order, so comparing indices compares labels.
using NodeIndex = std::uint32_t;

inline constexpr NodeIndex kNoNode = std::numeric_limits<NodeIndex>::max();

// One input edge: `child` hangs below `parent`, base length `base`, upgraded
// length `upgraded`.
struct EdgeRecord {
  Label child = 0;
  Label parent = 0;
  Length base = 0;
  Length upgraded = 0;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

// Immutable rooted tree. Every edge is identified with its child endpoint, so
// per-edge data lives in per-node arrays (the root's slot is unused).
// Upgrading node v raises every edge v -> child from its base to its upgraded
// length.
class RootedTree {
 public:
  // Validates and builds. Throws mspit::Error with one of kTrivialTree,
  // kDuplicateChild, kNegativeWeight, kUpgradeBelowBase, kCycleDetected,
  // kDisconnectedInput.
  static RootedTree build(std::span<const EdgeRecord> records, Label root);

  std::size_t size() const { return parent_.size(); }
  NodeIndex root() const { return root_; }

  NodeIndex parent(NodeIndex v) const { return parent_[v]; }
  std::span<const NodeIndex> children(NodeIndex v) const {
    return {child_list_.data() + child_begin_[v],
            child_list_.data() + child_begin_[v + 1]};
  }
  bool is_leaf(NodeIndex v) const { return child_begin_[v] == child_begin_[v + 1]; }
  // Undirected degree: child edges plus the parent edge (if any).
  std::size_t degree(NodeIndex v) const {
    return children(v).size() + (v == root_ ? 0 : 1);
  }

  // Lengths of the edge whose child endpoint is `child`.
  Length base(NodeIndex child) const { return base_[child]; }
  Length upgraded(NodeIndex child) const { return upgraded_[child]; }
  Length delta(NodeIndex child) const { return upgraded_[child] - base_[child]; }

  std::span<const NodeIndex> leaves() const { return leaves_; }
  // Nodes that can usefully be upgraded, i.e. every non-leaf.
  std::size_t upgradable_count() const { return size() - leaves_.size(); }

  // Root first, each node after its parent, children in ascending label order.
  std::span<const NodeIndex> bfs_order() const { return bfs_order_; }

  Label label(NodeIndex v) const { return labels_[v]; }
  // kNoNode when the label is not part of the tree.
  NodeIndex index_of(Label label) const;

  // Canonical edge list, ascending by child label.
  std::vector<EdgeRecord> records() const;

 private:
  RootedTree() = default;

  NodeIndex root_ = kNoNode;
  std::vector<Label> labels_;
  std::unordered_map<Label, NodeIndex> index_;
  std::vector<NodeIndex> parent_;
  std::vector<std::size_t> child_begin_;
  std::vector<NodeIndex> child_list_;
  std::vector<Length> base_;
  std::vector<Length> upgraded_;
  std::vector<NodeIndex> leaves_;
  std::vector<NodeIndex> bfs_order_;
};

// A set of upgraded nodes, kept sorted and duplicate-free.
class UpgradeSet {
 public:
  UpgradeSet() = default;
  explicit UpgradeSet(std::vector<NodeIndex> nodes);

  static UpgradeSet from_labels(const RootedTree& tree, std::span<const Label> labels);

  std::span<const NodeIndex> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  bool contains(NodeIndex v) const;

  std::vector<Label> labels(const RootedTree& tree) const;

  friend bool operator==(const UpgradeSet&, const UpgradeSet&) = default;

 private:
  std::vector<NodeIndex> nodes_;
};

struct Solution {
  Length value = 0;
  UpgradeSet upgraded;
  // Indexed by child node; the root's entry is 0.
  std::vector<Length> applied_weights;
};

// Edge lengths after upgrading `upgraded`. Throws kLeafInSet if the set holds
// a leaf.
std::vector<Length> applied_weights(const RootedTree& tree, const UpgradeSet& upgraded);

// Shortest root-leaf distance after upgrading `upgraded`. This is the ground
// truth every solver result is checked against. Throws kLeafInSet.
Length evaluate_min_distance(const RootedTree& tree, const UpgradeSet& upgraded);

// Shortest root-leaf distance with every non-leaf upgraded; no budget reaches
// further.
Length all_upgraded_min_distance(const RootedTree& tree);

// Shortest root-leaf distance with nothing upgraded.
Length baseline_min_distance(const RootedTree& tree);

// Packages a value together with its upgrade set and applied weights.
Solution make_solution(const RootedTree& tree, UpgradeSet upgraded);

}  // namespace mspit
