#include "mspit/chain_table.hpp"

#include <algorithm>
#include <string>

#include "mspit/error.hpp"

namespace mspit {

ChainTable::ChainTable(const Chain& chain, std::size_t budget) : chain_(&chain) {
  const std::size_t beta = chain.beta();
  max_k_[0] = std::min(beta - 1, budget);
  // With a zero budget the top cannot be upgraded; max_k < min_k marks the
  // row empty.
  max_k_[1] = std::min(beta, budget);

  const std::size_t tail_used = std::max(max_k_[0], max_k_[1] == 0 ? 0 : max_k_[1] - 1);
  prefix_.resize(tail_used + 1);
  prefix_[0] = chain.base_sum;
  for (std::size_t i = 1; i <= tail_used; ++i) prefix_[i] = prefix_[i - 1] + chain.deltas[i];
}

void ChainTable::check(bool top_upgraded, std::size_t k) const {
  if (!feasible(top_upgraded, k)) {
    throw Error(ErrorCode::kInfeasibleIndex,
                "chain cell (" + std::to_string(top_upgraded ? 1 : 0) + ", " + std::to_string(k) +
                    ") is outside the feasible domain");
  }
}

Length ChainTable::value(bool top_upgraded, std::size_t k) const {
  check(top_upgraded, k);
  return top_upgraded ? prefix_[k - 1] + chain_->head_delta() : prefix_[k];
}

std::size_t ChainTable::tail_prefix(bool top_upgraded, std::size_t k) const {
  check(top_upgraded, k);
  return top_upgraded ? k - 1 : k;
}

std::vector<NodeIndex> ChainTable::tail_nodes(bool top_upgraded, std::size_t k) const {
  const std::size_t count = tail_prefix(top_upgraded, k);
  return {chain_->owners.begin() + 1, chain_->owners.begin() + 1 + static_cast<std::ptrdiff_t>(count)};
}

}  // namespace mspit
