#include "mspit/testkit.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mspit/error.hpp"

namespace mspit::testkit {

namespace {

std::vector<NodeIndex> non_leaves(const RootedTree& tree) {
  std::vector<NodeIndex> out;
  for (NodeIndex v = 0; v < tree.size(); ++v) {
    if (!tree.is_leaf(v)) out.push_back(v);
  }
  return out;
}

void guard(const RootedTree& tree) {
  if (tree.upgradable_count() > kOracleLimit) {
    throw Error(ErrorCode::kTooLargeForOracle,
                "brute force handles at most " + std::to_string(kOracleLimit) +
                    " non-leaf nodes, tree has " + std::to_string(tree.upgradable_count()));
  }
}

// Advances `idx` (strictly increasing positions into a pool of size m) to the
// next combination in lexicographic order; false once exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
  const std::size_t c = idx.size();
  for (std::size_t i = c; i-- > 0;) {
    if (idx[i] < m - c + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < c; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Uniform integer in [0, bound] from raw 64-bit output, rejection sampled.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == std::numeric_limits<std::uint64_t>::max()) return rng();
  const std::uint64_t range = bound + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % range;
}

std::size_t draw_index(std::mt19937_64& rng, std::size_t size) {
  return static_cast<std::size_t>(draw(rng, size - 1));
}

std::vector<std::size_t> generate_parents(const GeneratorConfig& config, std::mt19937_64& rng) {
  const std::size_t n = config.nodes;
  std::vector<std::size_t> parent(n, 0);
  switch (config.shape) {
    case Shape::kUniformAttachment:
      for (std::size_t i = 1; i < n; ++i) parent[i] = draw_index(rng, i);
      break;
    case Shape::kCaterpillar: {
      const std::size_t spine = std::max<std::size_t>(1, n / 3);
      for (std::size_t i = 1; i < spine; ++i) parent[i] = i - 1;
      for (std::size_t i = spine; i < n; ++i) {
        // One in four hangs off an earlier pendant, growing short legs.
        if (i > spine && draw(rng, 3) == 0) {
          parent[i] = spine + draw_index(rng, i - spine);
        } else {
          parent[i] = draw_index(rng, spine);
        }
      }
      break;
    }
    case Shape::kBroom: {
      const std::size_t handle = std::max<std::size_t>(1, n / 2);
      for (std::size_t i = 1; i < handle; ++i) parent[i] = i - 1;
      for (std::size_t i = handle; i < n; ++i) {
        parent[i] = handle - 1 + draw_index(rng, i - handle + 1);
      }
      break;
    }
    case Shape::kBinaryIsh: {
      std::vector<std::size_t> open{0};
      std::vector<int> kids(n, 0);
      for (std::size_t i = 1; i < n; ++i) {
        const std::size_t slot = draw_index(rng, open.size());
        const std::size_t p = open[slot];
        parent[i] = p;
        if (++kids[p] == 2) {
          open[slot] = open.back();
          open.pop_back();
        }
        open.push_back(i);
      }
      break;
    }
  }
  return parent;
}

}  // namespace

OracleResult brute_force_mspit(const RootedTree& tree, std::size_t budget) {
  guard(tree);
  const std::vector<NodeIndex> pool = non_leaves(tree);
  const Length ceiling = all_upgraded_min_distance(tree);
  const std::size_t m = pool.size();

  OracleResult best{evaluate_min_distance(tree, UpgradeSet{}), UpgradeSet{}};
  for (std::size_t size = 1; size <= std::min(budget, m) && best.value < ceiling; ++size) {
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      std::vector<NodeIndex> nodes;
      nodes.reserve(size);
      for (std::size_t i : idx) nodes.push_back(pool[i]);
      UpgradeSet s(std::move(nodes));
      const Length value = evaluate_min_distance(tree, s);
      if (value > best.value) best = {value, std::move(s)};
    } while (best.value < ceiling && next_combination(idx, m));
  }
  return best;
}

std::size_t brute_force_mcspit(const RootedTree& tree, Length target) {
  guard(tree);
  const Length ceiling = all_upgraded_min_distance(tree);
  if (target > ceiling) throw TargetUnreachable(target, ceiling);
  for (std::size_t k = 0;; ++k) {
    if (brute_force_mspit(tree, k).value >= target) return k;
  }
}

std::string_view to_string(Shape shape) {
  switch (shape) {
    case Shape::kUniformAttachment: return "uniform-attachment";
    case Shape::kCaterpillar: return "caterpillar";
    case Shape::kBroom: return "broom";
    case Shape::kBinaryIsh: return "binary-ish";
  }
  return "unknown";
}

std::optional<Shape> parse_shape(std::string_view name) {
  for (Shape s : {Shape::kUniformAttachment, Shape::kCaterpillar, Shape::kBroom,
                  Shape::kBinaryIsh}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

RootedTree random_tree(const GeneratorConfig& config) {
  if (config.nodes < 2) throw std::invalid_argument("generator needs at least two nodes");
  if (config.w_max < 0 || config.delta_max < 0) {
    throw std::invalid_argument("weight bounds must be non-negative");
  }
  std::mt19937_64 rng(config.seed);
  const std::vector<std::size_t> parent = generate_parents(config, rng);

  std::vector<Label> label(config.nodes);
  std::iota(label.begin(), label.end(), Label{1});
  for (std::size_t i = config.nodes - 1; i > 0; --i) {
    std::swap(label[i], label[draw(rng, i)]);
  }

  std::vector<EdgeRecord> records;
  records.reserve(config.nodes - 1);
  for (std::size_t i = 1; i < config.nodes; ++i) {
    const Length w = static_cast<Length>(draw(rng, static_cast<std::uint64_t>(config.w_max)));
    const Length d = static_cast<Length>(draw(rng, static_cast<std::uint64_t>(config.delta_max)));
    records.push_back({label[i], label[parent[i]], w, w + d});
  }
  return RootedTree::build(records, label[0]);
}

}  // namespace mspit::testkit
