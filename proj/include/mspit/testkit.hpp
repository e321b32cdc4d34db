#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "mspit/rooted_tree.hpp"

namespace mspit::testkit {

// Largest non-leaf count the exhaustive oracles accept.
inline constexpr std::size_t kOracleLimit = 25;

struct OracleResult {
  Length value = 0;
  UpgradeSet upgraded;
};

// Exact optimum by enumerating every subset of non-leaf nodes with at most
// `budget` members, smallest subsets first and lexicographically within a
// size. Ties keep the first subset found. Throws kTooLargeForOracle.
OracleResult brute_force_mspit(const RootedTree& tree, std::size_t budget);

// Smallest budget whose brute-force optimum reaches `target`, by linear scan.
// Throws TargetUnreachable or kTooLargeForOracle.
std::size_t brute_force_mcspit(const RootedTree& tree, Length target);

enum class Shape {
  kUniformAttachment,  // each new node picks a uniformly random earlier parent
  kCaterpillar,        // a spine with pendant leaves and short legs
  kBroom,              // a long handle ending in a bushy head
  kBinaryIsh,          // parents drawn among nodes with fewer than two children
};

std::string_view to_string(Shape shape);
std::optional<Shape> parse_shape(std::string_view name);

struct GeneratorConfig {
  std::size_t nodes = 2;
  std::uint64_t seed = 0;
  Length w_max = 100;
  Length delta_max = 100;
  Shape shape = Shape::kUniformAttachment;
};

// Deterministic for a given config on every platform: the bounded draws are
// done here rather than through the library's distributions. Node ids are a
// random permutation of 1..n. Throws std::invalid_argument on n < 2 or
// negative weight bounds.
RootedTree random_tree(const GeneratorConfig& config);

}  // namespace mspit::testkit
