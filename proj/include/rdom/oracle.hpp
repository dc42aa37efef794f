#pragma once

#include <cstddef>

#include "rdom/graph.hpp"
#include "rdom/order.hpp"
#include "rdom/wreach.hpp"

namespace rdom::oracle {

// Exhaustive ground truth for small graphs. Every function refuses inputs
// above its size limit with OracleLimit.

struct SetResult {
  VertexSet set;  // lexicographically least optimum, sorted
  std::size_t size() const noexcept { return set.size(); }
};

/// Minimum distance-r dominating set by increasing cardinality.
SetResult min_domset(const Graph& g, int r, std::size_t limit_n = 18);

/// Minimum distance-r dominating set inducing a connected subgraph.
/// Throws PreconditionError on disconnected input.
SetResult min_connected_domset(const Graph& g, int r, std::size_t limit_n = 14);

struct WcolResult {
  std::size_t value = 0;
  LinearOrder order;  // first order (lexicographically) attaining the value
};

/// min over all orders of max_v |WReach_k[v]|.
WcolResult exact_wcol(const Graph& g, int k, std::size_t limit_n = 8);

/// WReach_k straight from the definition: enumerate all simple paths of
/// length <= k and keep, per (v, w), the least certificate (shortest, then
/// least super-id sequence from w).
WReachTable wreach_bruteforce(const Graph& g, const LinearOrder& order, int k, std::size_t limit_n = 10);

}  // namespace rdom::oracle
