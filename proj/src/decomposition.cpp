#include "mspit/decomposition.hpp"

#include <algorithm>
#include <functional>

namespace mspit {

namespace {

bool is_branching(const RootedTree& tree, NodeIndex v) {
  return v != tree.root() && tree.degree(v) > 2;
}

}  // namespace

Layers compute_layers(const RootedTree& tree) {
  Layers layers;
  layers.node.assign(tree.size(), 0);
  layers.edge.assign(tree.size(), 0);
  for (NodeIndex v : tree.bfs_order()) {
    if (v == tree.root()) {
      layers.node[v] = 1;
      continue;
    }
    const int above = layers.node[tree.parent(v)];
    layers.node[v] = above + (is_branching(tree, v) ? 1 : 0);
    layers.edge[v] = above;
  }
  return layers;
}

CriticalStructure critical_structure(const RootedTree& tree) {
  CriticalStructure cs;
  const std::size_t n = tree.size();
  cs.is_junction.assign(n, 0);
  cs.descendants.resize(n);
  cs.ancestor.assign(n, kNoNode);
  cs.is_junction[tree.root()] = 1;
  for (NodeIndex v = 0; v < n; ++v) {
    if (is_branching(tree, v)) {
      cs.is_junction[v] = 1;
      cs.branching.push_back(v);
    }
  }

  // Nearest junction strictly above each node, computed top-down.
  std::vector<NodeIndex> junction_above(n, kNoNode);
  for (NodeIndex v : tree.bfs_order()) {
    if (v == tree.root()) continue;
    const NodeIndex p = tree.parent(v);
    junction_above[v] = cs.is_junction[p] ? p : junction_above[p];
    if (cs.is_junction[v] || tree.is_leaf(v)) {
      const NodeIndex a = junction_above[v];
      cs.ancestor[v] = a;
      cs.descendants[a].push_back(v);
    }
  }
  for (auto& list : cs.descendants) std::sort(list.begin(), list.end(), std::greater<>());
  return cs;
}

std::vector<Chain> extract_chains(const RootedTree& tree, const CriticalStructure& structure) {
  std::vector<Chain> chains(tree.size());
  for (NodeIndex bottom = 0; bottom < tree.size(); ++bottom) {
    const NodeIndex top = structure.ancestor[bottom];
    if (top == kNoNode) continue;
    Chain& c = chains[bottom];
    c.top = top;
    c.bottom = bottom;
    for (NodeIndex v = bottom; v != top; v = tree.parent(v)) c.edges.push_back(v);
    std::reverse(c.edges.begin(), c.edges.end());

    std::sort(c.edges.begin() + 1, c.edges.end(), [&](NodeIndex a, NodeIndex b) {
      if (tree.delta(a) != tree.delta(b)) return tree.delta(a) > tree.delta(b);
      return tree.parent(a) < tree.parent(b);
    });
    for (NodeIndex e : c.edges) {
      c.owners.push_back(tree.parent(e));
      c.deltas.push_back(tree.delta(e));
      c.base_sum += tree.base(e);
    }
  }
  return chains;
}

std::vector<NodeIndex> processing_order(const RootedTree& tree,
                                        const CriticalStructure& structure,
                                        const Layers& layers) {
  std::vector<NodeIndex> order = structure.branching;
  order.push_back(tree.root());
  std::sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) {
    if (layers.node[a] != layers.node[b]) return layers.node[a] > layers.node[b];
    return a > b;
  });
  return order;
}

Decomposition decompose(const RootedTree& tree) {
  Decomposition d;
  d.layers = compute_layers(tree);
  d.structure = critical_structure(tree);
  d.chains = extract_chains(tree, d.structure);
  d.order = processing_order(tree, d.structure, d.layers);
  return d;
}

}  // namespace mspit
