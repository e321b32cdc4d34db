#pragma once

#include <cstddef>
#include <vector>

#include "mspit/rooted_tree.hpp"

namespace mspit {

// Layer labels. A node's layer equals its parent's, plus one when the node is
// branching (undirected degree > 2); the root is layer 1. An edge takes the
// layer of its parent endpoint.
struct Layers {
  std::vector<int> node;  // indexed by node
  std::vector<int> edge;  // indexed by child endpoint; 0 in the root slot
};

Layers compute_layers(const RootedTree& tree);

// Junctions are the root plus every branching node. Each junction owns a list
// of critical descendants: the nearest branching node or leaf below it along
// every downward path. Each critical descendant has exactly one critical
// ancestor, its nearest junction above.
struct CriticalStructure {
  std::vector<NodeIndex> branching;               // ascending, root excluded
  std::vector<char> is_junction;                  // indexed by node
  std::vector<std::vector<NodeIndex>> descendants;  // indexed by junction
  std::vector<NodeIndex> ancestor;                // kNoNode unless a critical descendant
};

// In layer terms: a branching descendant sits one layer below its ancestor, a
// leaf descendant on the same layer.
//
// Descendant lists are ordered by descending node id. Any fixed order is
// valid; this one lines up branch positions with the worked example tables.
CriticalStructure critical_structure(const RootedTree& tree);

// The path from a junction down to one of its critical descendants. Every
// interior node has degree 2, so upgrading it affects this chain alone.
//
// Position 0 is always the physical first edge, upgraded only by upgrading
// `top`. The tail (positions 1..beta-1) is re-ordered by non-increasing delta,
// ties by ascending owner id; swapping two degree-2 nodes on a chain leaves
// the set of achievable chain lengths unchanged, so the best k upgrades on
// the tail are always a prefix.
struct Chain {
  NodeIndex top = kNoNode;
  NodeIndex bottom = kNoNode;
  // Child endpoints of the chain edges, in the order described above.
  std::vector<NodeIndex> edges;
  // owners[i] is the node whose upgrade raises edges[i]; owners[0] == top.
  std::vector<NodeIndex> owners;
  // Deltas of the edges, parallel to `edges`.
  std::vector<Length> deltas;
  Length base_sum = 0;

  std::size_t beta() const { return edges.size(); }
  Length head_delta() const { return deltas.front(); }
};

// One chain per critical descendant, indexed by that descendant. Entries for
// nodes that are not critical descendants are empty (beta() == 0).
std::vector<Chain> extract_chains(const RootedTree& tree, const CriticalStructure& structure);

// Junctions by descending layer, ties by descending id. A junction always
// comes after every junction below it.
std::vector<NodeIndex> processing_order(const RootedTree& tree,
                                        const CriticalStructure& structure,
                                        const Layers& layers);

struct Decomposition {
  Layers layers;
  CriticalStructure structure;
  std::vector<Chain> chains;
  std::vector<NodeIndex> order;

  const Chain& chain(NodeIndex bottom) const { return chains[bottom]; }
  const std::vector<NodeIndex>& descendants(NodeIndex junction) const {
    return structure.descendants[junction];
  }
};

Decomposition decompose(const RootedTree& tree);

}  // namespace mspit
