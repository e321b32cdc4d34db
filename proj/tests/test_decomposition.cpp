#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "mspit/decomposition.hpp"
#include "mspit/testkit.hpp"

using namespace mspit;

namespace {

std::vector<Label> to_labels(const RootedTree& t, const std::vector<NodeIndex>& nodes) {
  std::vector<Label> out;
  for (NodeIndex v : nodes) out.push_back(t.label(v));
  return out;
}

RootedTree path_tree(std::size_t n) {
  std::vector<EdgeRecord> r;
  for (Label i = 2; i <= static_cast<Label>(n); ++i) r.push_back({i, i - 1, 1, 2});
  return RootedTree::build(r, 1);
}

RootedTree star_tree(std::size_t leaves) {
  std::vector<EdgeRecord> r;
  for (Label i = 2; i <= static_cast<Label>(leaves) + 1; ++i) r.push_back({i, 1, 1, 2});
  return RootedTree::build(r, 1);
}

}  // namespace

TEST_CASE("layers of the worked example") {
  const RootedTree t = fixtures::ex1();
  const Layers l = compute_layers(t);
  auto layer = [&](Label v) { return l.node[fixtures::node(t, v)]; };
  CHECK(layer(1) == 1);
  CHECK(layer(2) == 2);
  CHECK(layer(5) == 1);
  CHECK(layer(7) == 2);
  CHECK(layer(3) == 2);
  CHECK(layer(6) == 1);
  CHECK(l.edge[fixtures::node(t, 2)] == 1);
  CHECK(l.edge[fixtures::node(t, 10)] == 2);

  const RootedTree p = path_tree(9);
  const Layers pl = compute_layers(p);
  CHECK(std::all_of(pl.node.begin(), pl.node.end(), [](int x) { return x == 1; }));
}

TEST_CASE("critical descendants and ancestors of the worked example") {
  const RootedTree t = fixtures::ex1();
  const CriticalStructure cs = critical_structure(t);
  auto cd = [&](Label v) {
    auto list = to_labels(t, cs.descendants[fixtures::node(t, v)]);
    std::sort(list.begin(), list.end());
    return list;
  };
  CHECK(cd(1) == std::vector<Label>{2, 6, 7});
  CHECK(cd(2) == std::vector<Label>{3, 4});
  CHECK(cd(7) == std::vector<Label>{8, 10});
  CHECK(to_labels(t, cs.branching) == std::vector<Label>{2, 7});
  CHECK(t.label(cs.ancestor[fixtures::node(t, 2)]) == 1);
  CHECK(t.label(cs.ancestor[fixtures::node(t, 10)]) == 7);
  CHECK(cs.ancestor[fixtures::node(t, 5)] == kNoNode);

  // Stored order is descending id.
  CHECK(to_labels(t, cs.descendants[t.root()]) == std::vector<Label>{7, 6, 2});
}

TEST_CASE("chains of the worked example") {
  const RootedTree t = fixtures::ex1();
  const Decomposition d = decompose(t);

  const Chain& c6 = d.chain(fixtures::node(t, 6));
  CHECK(c6.base_sum == 9);
  CHECK(c6.beta() == 2);
  CHECK(c6.head_delta() == 9);
  CHECK(c6.deltas == std::vector<Length>{9, 2});
  CHECK(to_labels(t, c6.owners) == std::vector<Label>{1, 5});

  const Chain& c10 = d.chain(fixtures::node(t, 10));
  CHECK(c10.base_sum == 9);
  CHECK(c10.beta() == 2);
  CHECK(c10.head_delta() == 6);
  CHECK(c10.deltas == std::vector<Length>{6, 5});

  const Chain& c2 = d.chain(fixtures::node(t, 2));
  CHECK(c2.beta() == 1);
  CHECK(t.label(c2.top) == 1);
}

TEST_CASE("chain tails are sorted by delta, head stays put") {
  // 1 -> 2 -> 3 -> 4 -> 5, head delta 1 then tail deltas 3, 9, 5.
  const std::vector<EdgeRecord> r{{2, 1, 0, 1}, {3, 2, 0, 3}, {4, 3, 0, 9}, {5, 4, 0, 5}};
  const RootedTree t = RootedTree::build(r, 1);
  const Decomposition d = decompose(t);
  const Chain& c = d.chain(fixtures::node(t, 5));
  CHECK(c.deltas == std::vector<Length>{1, 9, 5, 3});
  CHECK(to_labels(t, c.owners) == std::vector<Label>{1, 3, 4, 2});
  CHECK(to_labels(t, c.edges) == std::vector<Label>{2, 4, 5, 3});
  CHECK(c.base_sum == 0);

  // Equal deltas fall back to ascending owner id.
  const std::vector<EdgeRecord> tie{{2, 1, 0, 1}, {3, 2, 0, 4}, {4, 3, 0, 4}, {5, 4, 0, 4}};
  const RootedTree tt = RootedTree::build(tie, 1);
  CHECK(to_labels(tt, decompose(tt).chain(fixtures::node(tt, 5)).owners) ==
        std::vector<Label>{1, 2, 3, 4});
}

TEST_CASE("processing order") {
  const RootedTree t = fixtures::ex1();
  const Decomposition d = decompose(t);
  CHECK(to_labels(t, d.order) == std::vector<Label>{7, 2, 1});

  const RootedTree s = star_tree(5);
  CHECK(to_labels(s, decompose(s).order) == std::vector<Label>{1});
  const RootedTree p = path_tree(6);
  CHECK(to_labels(p, decompose(p).order) == std::vector<Label>{1});
}

TEST_CASE("structural invariants on random trees") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    testkit::GeneratorConfig cfg;
    cfg.nodes = 2 + rng() % 60;
    cfg.seed = rng();
    cfg.shape = static_cast<testkit::Shape>(trial % 4);
    const RootedTree t = testkit::random_tree(cfg);
    const Decomposition d = decompose(t);
    const auto& cs = d.structure;

    std::size_t beta_total = 0;
    std::vector<int> covered(t.size(), 0);
    for (NodeIndex j = 0; j < t.size(); ++j) {
      const bool junction = cs.is_junction[j] != 0;
      if (junction) {
        const std::size_t p = cs.descendants[j].size();
        REQUIRE(p == (j == t.root() ? t.degree(j) : t.degree(j) - 1));
        for (NodeIndex h : cs.descendants[j]) {
          REQUIRE(cs.ancestor[h] == j);
          // Branching descendants one layer down, leaves on the same layer.
          const int expect = d.layers.node[j] + (t.is_leaf(h) ? 0 : 1);
          REQUIRE(d.layers.node[h] == expect);
        }
      }
      const Chain& c = d.chain(j);
      if (c.beta() == 0) continue;
      beta_total += c.beta();
      REQUIRE(c.owners.front() == c.top);
      REQUIRE(t.parent(c.edges.front()) == c.top);
      Length sum = 0;
      for (std::size_t i = 0; i < c.beta(); ++i) {
        ++covered[c.edges[i]];
        sum += t.base(c.edges[i]);
        REQUIRE(c.owners[i] == t.parent(c.edges[i]));
        if (i > 0) REQUIRE(t.degree(c.owners[i]) == 2);
        if (i > 1) REQUIRE(c.deltas[i - 1] >= c.deltas[i]);
      }
      REQUIRE(sum == c.base_sum);
    }
    REQUIRE(beta_total == t.size() - 1);
    for (NodeIndex v = 0; v < t.size(); ++v) REQUIRE(covered[v] == (v == t.root() ? 0 : 1));

    // Layers never drop along an edge and rise by at most one.
    for (NodeIndex v = 0; v < t.size(); ++v) {
      if (v == t.root()) continue;
      const int step = d.layers.node[v] - d.layers.node[t.parent(v)];
      REQUIRE((step == 0 || step == 1));
      REQUIRE(d.layers.edge[v] == d.layers.node[t.parent(v)]);
    }

    // Every junction is processed after all junctions beneath it.
    std::vector<std::size_t> pos(t.size(), 0);
    for (std::size_t i = 0; i < d.order.size(); ++i) pos[d.order[i]] = i;
    REQUIRE(d.order.size() == cs.branching.size() + 1);
    for (NodeIndex b : cs.branching) REQUIRE(pos[b] < pos[cs.ancestor[b]]);
  }
}
