#include "mspit/rooted_tree.hpp"

#include <algorithm>
#include <string>

#include "mspit/error.hpp"

namespace mspit {

namespace {

std::string describe(const EdgeRecord& r) {
  return "edge " + std::to_string(r.child) + " <- " + std::to_string(r.parent);
}

}  // namespace

RootedTree RootedTree::build(std::span<const EdgeRecord> records, Label root) {
  if (records.empty()) {
    throw Error(ErrorCode::kTrivialTree, "a tree needs at least two nodes");
  }

  for (const EdgeRecord& r : records) {
    if (r.base < 0 || r.upgraded < 0) {
      throw Error(ErrorCode::kNegativeWeight, describe(r) + " has a negative length");
    }
    if (r.base > r.upgraded) {
      throw Error(ErrorCode::kUpgradeBelowBase,
                  describe(r) + " has upgraded length " + std::to_string(r.upgraded) +
                      " below base length " + std::to_string(r.base));
    }
    if (r.child == r.parent) {
      throw Error(ErrorCode::kCycleDetected, describe(r) + " is a self-loop");
    }
  }

  RootedTree tree;
  tree.labels_.reserve(records.size() + 1);
  tree.labels_.push_back(root);
  for (const EdgeRecord& r : records) {
    tree.labels_.push_back(r.child);
    tree.labels_.push_back(r.parent);
  }
  std::sort(tree.labels_.begin(), tree.labels_.end());
  tree.labels_.erase(std::unique(tree.labels_.begin(), tree.labels_.end()),
                     tree.labels_.end());
  const std::size_t n = tree.labels_.size();
  tree.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    tree.index_.emplace(tree.labels_[i], static_cast<NodeIndex>(i));
  }

  tree.root_ = tree.index_.at(root);
  tree.parent_.assign(n, kNoNode);
  tree.base_.assign(n, 0);
  tree.upgraded_.assign(n, 0);
  for (const EdgeRecord& r : records) {
    const NodeIndex c = tree.index_.at(r.child);
    if (tree.parent_[c] != kNoNode) {
      throw Error(ErrorCode::kDuplicateChild,
                  "node " + std::to_string(r.child) + " has more than one parent");
    }
    tree.parent_[c] = tree.index_.at(r.parent);
    tree.base_[c] = r.base;
    tree.upgraded_[c] = r.upgraded;
  }

  // Children in CSR form; iterating nodes in index order keeps each child list
  // sorted by label.
  tree.child_begin_.assign(n + 1, 0);
  for (NodeIndex v = 0; v < n; ++v) {
    if (tree.parent_[v] != kNoNode) ++tree.child_begin_[tree.parent_[v] + 1];
  }
  for (std::size_t i = 0; i < n; ++i) tree.child_begin_[i + 1] += tree.child_begin_[i];
  tree.child_list_.resize(tree.child_begin_[n]);
  {
    std::vector<std::size_t> cursor(tree.child_begin_.begin(), tree.child_begin_.end() - 1);
    for (NodeIndex v = 0; v < n; ++v) {
      if (tree.parent_[v] != kNoNode) tree.child_list_[cursor[tree.parent_[v]]++] = v;
    }
  }

  // Walk down from the root; whatever is unreached is either on a cycle or
  // hanging off some other parentless node.
  tree.bfs_order_.reserve(n);
  if (tree.parent_[tree.root_] == kNoNode) {
    tree.bfs_order_.push_back(tree.root_);
    for (std::size_t head = 0; head < tree.bfs_order_.size(); ++head) {
      for (NodeIndex c : tree.children(tree.bfs_order_[head])) tree.bfs_order_.push_back(c);
    }
  }
  if (tree.bfs_order_.size() != n) {
    std::vector<char> reached(n, 0);
    for (NodeIndex v : tree.bfs_order_) reached[v] = 1;
    for (NodeIndex start = 0; start < n; ++start) {
      if (reached[start]) continue;
      // A parent walk longer than n steps must loop.
      NodeIndex v = start;
      std::size_t steps = 0;
      while (v != kNoNode && steps <= n) {
        v = tree.parent_[v];
        ++steps;
      }
      if (v != kNoNode) {
        throw Error(ErrorCode::kCycleDetected,
                    "node " + std::to_string(tree.labels_[start]) + " lies on or below a cycle");
      }
    }
    throw Error(ErrorCode::kDisconnectedInput,
                "not every node is reachable from root " + std::to_string(root));
  }

  for (NodeIndex v = 0; v < n; ++v) {
    if (tree.is_leaf(v)) tree.leaves_.push_back(v);
  }
  return tree;
}

NodeIndex RootedTree::index_of(Label label) const {
  auto it = index_.find(label);
  return it == index_.end() ? kNoNode : it->second;
}

std::vector<EdgeRecord> RootedTree::records() const {
  std::vector<EdgeRecord> out;
  out.reserve(size() - 1);
  for (NodeIndex v = 0; v < size(); ++v) {
    if (v == root_) continue;
    out.push_back({labels_[v], labels_[parent_[v]], base_[v], upgraded_[v]});
  }
  return out;
}

UpgradeSet::UpgradeSet(std::vector<NodeIndex> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
}

UpgradeSet UpgradeSet::from_labels(const RootedTree& tree, std::span<const Label> labels) {
  std::vector<NodeIndex> nodes;
  nodes.reserve(labels.size());
  for (Label l : labels) {
    const NodeIndex v = tree.index_of(l);
    if (v == kNoNode) {
      throw Error(ErrorCode::kUnknownNode, "node " + std::to_string(l) + " is not in the tree");
    }
    nodes.push_back(v);
  }
  return UpgradeSet(std::move(nodes));
}

bool UpgradeSet::contains(NodeIndex v) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), v);
}

std::vector<Label> UpgradeSet::labels(const RootedTree& tree) const {
  std::vector<Label> out;
  out.reserve(nodes_.size());
  for (NodeIndex v : nodes_) out.push_back(tree.label(v));
  return out;
}

std::vector<Length> applied_weights(const RootedTree& tree, const UpgradeSet& upgraded) {
  std::vector<char> on(tree.size(), 0);
  for (NodeIndex v : upgraded.nodes()) {
    if (v >= tree.size()) {
      throw Error(ErrorCode::kUnknownNode, "node index " + std::to_string(v) + " out of range");
    }
    if (tree.is_leaf(v)) {
      throw Error(ErrorCode::kLeafInSet,
                  "leaf " + std::to_string(tree.label(v)) + " cannot be upgraded");
    }
    on[v] = 1;
  }
  std::vector<Length> weights(tree.size(), 0);
  for (NodeIndex v = 0; v < tree.size(); ++v) {
    if (v == tree.root()) continue;
    weights[v] = on[tree.parent(v)] ? tree.upgraded(v) : tree.base(v);
  }
  return weights;
}

namespace {

Length min_leaf_distance(const RootedTree& tree, std::span<const Length> weights) {
  std::vector<Length> dist(tree.size(), 0);
  for (NodeIndex v : tree.bfs_order()) {
    if (v != tree.root()) dist[v] = dist[tree.parent(v)] + weights[v];
  }
  Length best = std::numeric_limits<Length>::max();
  for (NodeIndex leaf : tree.leaves()) best = std::min(best, dist[leaf]);
  return best;
}

}  // namespace

Length evaluate_min_distance(const RootedTree& tree, const UpgradeSet& upgraded) {
  return min_leaf_distance(tree, applied_weights(tree, upgraded));
}

Length all_upgraded_min_distance(const RootedTree& tree) {
  std::vector<Length> weights(tree.size(), 0);
  for (NodeIndex v = 0; v < tree.size(); ++v) {
    if (v != tree.root()) weights[v] = tree.upgraded(v);
  }
  return min_leaf_distance(tree, weights);
}

Length baseline_min_distance(const RootedTree& tree) {
  std::vector<Length> weights(tree.size(), 0);
  for (NodeIndex v = 0; v < tree.size(); ++v) {
    if (v != tree.root()) weights[v] = tree.base(v);
  }
  return min_leaf_distance(tree, weights);
}

Solution make_solution(const RootedTree& tree, UpgradeSet upgraded) {
  Solution s;
  s.applied_weights = applied_weights(tree, upgraded);
  s.value = min_leaf_distance(tree, s.applied_weights);
  s.upgraded = std::move(upgraded);
  return s;
}

}  // namespace mspit
