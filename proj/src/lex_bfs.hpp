#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "rdom/graph.hpp"

namespace rdom::detail {

// Layered BFS that yields, for every reached vertex, the lexicographically
// least shortest path from the source. The caller's expansion must emit the
// neighbours of a vertex in increasing key order; then appending unvisited
// children while scanning a layer in discovery order keeps every layer
// sorted by path, and the first parent to reach a child is its best one.
//
// One instance is scratch space for a single thread; searches are reset in
// time proportional to the previous search.
class LexBfs {
 public:
  explicit LexBfs(std::size_t n) : parent_(n), depth_(n, -1) {}

  template <class Expand>
  void run(Vertex source, int max_depth, Expand&& expand) {
    for (Vertex v : order_) depth_[v] = -1;
    order_.clear();
    order_.push_back(source);
    depth_[source] = 0;
    parent_[source] = source;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const Vertex x = order_[head];
      const int dx = depth_[x];
      if (dx >= max_depth) continue;
      expand(x, [&](Vertex y) {
        if (depth_[y] < 0) {
          depth_[y] = dx + 1;
          parent_[y] = x;
          order_.push_back(y);
        }
      });
    }
  }

  // Reached vertices, layer by layer, each layer in path order.
  std::span<const Vertex> visited() const noexcept { return order_; }
  bool reached(Vertex v) const noexcept { return depth_[v] >= 0; }
  int depth(Vertex v) const noexcept { return depth_[v]; }

  // Source-to-v path; v must be reached.
  void path_to(Vertex v, std::vector<Vertex>& out) const {
    out.clear();
    for (;;) {
      out.push_back(v);
      if (depth_[v] == 0) break;
      v = parent_[v];
    }
    std::reverse(out.begin(), out.end());
  }

 private:
  std::vector<Vertex> parent_;
  std::vector<int> depth_;
  std::vector<Vertex> order_;
};

}  // namespace rdom::detail
