#pragma once

#include <cstddef>
#include <vector>

#include "mspit/decomposition.hpp"

namespace mspit {

// Best achievable length of one chain when exactly k of its nodes are
// upgraded, split by whether the chain's top junction is among them.
//
// Without the top, k ranges over [0, min(beta - 1, budget)] and the k largest
// tail deltas are taken. With the top, k ranges over [1, min(beta, budget)]:
// the head delta plus the k - 1 largest tail deltas.
class ChainTable {
 public:
  ChainTable(const Chain& chain, std::size_t budget);

  const Chain& chain() const { return *chain_; }

  // Largest feasible k for the given top flag; min_k is 0 without the top, 1
  // with it.
  std::size_t min_k(bool top_upgraded) const { return top_upgraded ? 1 : 0; }
  std::size_t max_k(bool top_upgraded) const { return max_k_[top_upgraded]; }
  bool feasible(bool top_upgraded, std::size_t k) const {
    return k >= min_k(top_upgraded) && k <= max_k(top_upgraded);
  }

  // Throws kInfeasibleIndex outside the feasible domain.
  Length value(bool top_upgraded, std::size_t k) const;

  // How many sorted tail positions are upgraded in the optimal choice.
  std::size_t tail_prefix(bool top_upgraded, std::size_t k) const;

  // The chain nodes upgraded by the optimal choice, excluding the top.
  std::vector<NodeIndex> tail_nodes(bool top_upgraded, std::size_t k) const;

 private:
  void check(bool top_upgraded, std::size_t k) const;

  const Chain* chain_;
  std::size_t max_k_[2];
  // prefix_[i] = base_sum + sum of the first i tail deltas.
  std::vector<Length> prefix_;
};

}  // namespace mspit
