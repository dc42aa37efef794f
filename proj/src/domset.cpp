#include "rdom/domset.hpp"

#include <algorithm>
#include <deque>

#include "rdom/error.hpp"
#include "rdom/wreach.hpp"

namespace rdom {

namespace {

// Scratch for the restricted search, reset in time proportional to its use.
class RestrictedSearch {
 public:
  explicit RestrictedSearch(std::size_t n) : depth_(n, -1) {}

  const std::vector<Vertex>& run(const OrderedAdjacency& adj, const LinearOrder& order, Vertex v, int r,
                                 SearchWork* work) {
    for (Vertex x : marked_) depth_[x] = -1;
    marked_.clear();
    marked_.push_back(v);
    depth_[v] = 0;
    const auto floor = order.rank(v);
    std::uint64_t visited = 1, scanned = 0;
    for (std::size_t head = 0; head < marked_.size(); ++head) {
      const Vertex w = marked_[head];
      if (depth_[w] >= r) continue;
      const auto nbrs = adj.neighbors(w);
      for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
        const Vertex u = *it;
        ++scanned;
        if (order.rank(u) <= floor) {
          ++visited;  // the one entry below v that stops this list
          break;
        }
        if (depth_[u] < 0) {
          depth_[u] = depth_[w] + 1;
          marked_.push_back(u);
          ++visited;
        }
      }
    }
    if (work) {
      work->visited += visited;
      work->scanned += scanned;
    }
    return marked_;
  }

 private:
  std::vector<int> depth_;
  std::vector<Vertex> marked_;
};

}  // namespace

VertexSet restricted_bfs(const OrderedAdjacency& adj, const LinearOrder& order, Vertex v, int r,
                         SearchWork* work) {
  if (r < 0) throw InvalidArgument("search radius must be non-negative");
  RestrictedSearch search(adj.size());
  VertexSet out = search.run(adj, order, v, r, work);
  std::sort(out.begin(), out.end());
  return out;
}

DomSetResult domset(const Graph& g, const LinearOrder& order, int r) {
  if (r < 0) throw InvalidArgument("domination radius must be non-negative");
  if (order.size() != g.size()) throw InvalidArgument("order size does not match graph");
  const std::size_t n = g.size();
  constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

  DomSetResult result;
  result.r = r;
  result.order = order;
  result.dominated_by.assign(n, kNone);

  const auto adj = sort_adjacency(g, order);
  RestrictedSearch search(n);
  for (Vertex vi : order.sequence()) {
    const auto& reached = search.run(adj, order, vi, r, &result.work);
    bool fresh = false;
    for (Vertex w : reached) {
      if (result.dominated_by[w] == kNone) {
        result.dominated_by[w] = vi;
        fresh = true;
      }
    }
    if (fresh) result.dominators.push_back(vi);
  }
  std::sort(result.dominators.begin(), result.dominators.end());
  result.certificate_c = wcol_value(wreach(g, order, 2 * r));
  return result;
}

Json domset_to_json(const DomSetResult& result, const Graph& g) {
  Json d = Json::array();
  for (Vertex v : result.dominators) d.push_back(g.id(v));
  Json j;
  j["r"] = result.r;
  j["D"] = std::move(d);
  j["D_size"] = result.dominators.size();
  j["certificate_c"] = result.certificate_c;
  return j;
}

}  // namespace rdom
