#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rdom/graph.hpp"
#include "rdom/io.hpp"
#include "rdom/order.hpp"

namespace rdom {

/// Work done by the restricted searches, for checking the linear-time bound.
struct SearchWork {
  std::uint64_t visited = 0;  // vertices marked, plus the one stopping entry per scanned list
  std::uint64_t scanned = 0;  // adjacency entries examined in total
};

/// Vertices reachable from v in at most r steps through vertices above v
/// only, i.e. { w : v in WReach_r[w] }. Each list is scanned from its
/// largest entry down and abandoned at the first entry below v. The result
/// is sorted by index and includes v.
VertexSet restricted_bfs(const OrderedAdjacency& adj, const LinearOrder& order, Vertex v, int r,
                         SearchWork* work = nullptr);

struct DomSetResult {
  int r = 0;
  LinearOrder order;
  VertexSet dominators;                 // D, sorted by index
  std::vector<Vertex> dominated_by;     // first (L-smallest) member of D whose search reached w
  std::size_t certificate_c = 0;        // max |WReach_2r| for `order`
  std::size_t ratio_bound() const { return certificate_c; }
  SearchWork work;
};

/// Greedy pass along the order: v joins D iff its restricted search reaches
/// a vertex not yet dominated. D = { min WReach_r[w] : w in V(G) } and
/// |D| <= certificate_c * |OPT|.
DomSetResult domset(const Graph& g, const LinearOrder& order, int r);

/// {r, D:[ids], D_size, certificate_c}; add opt fields via the caller.
Json domset_to_json(const DomSetResult& result, const Graph& g);

}  // namespace rdom
