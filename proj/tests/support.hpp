#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "rdom/generators.hpp"
#include "rdom/graph.hpp"
#include "rdom/order.hpp"

namespace rdom::test {

struct Named {
  std::string name;
  Graph graph;
};

inline Graph from_pairs(std::initializer_list<IdPair> edges, std::vector<ExternalId> vertices = {}) {
  std::vector<IdPair> e(edges);
  return Graph::from_edges(e, vertices);
}

/// P3 + C4 + an isolated vertex.
inline Graph disconnected_sample() {
  return from_pairs({{1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {7, 4}}, {8});
}

/// Small graphs from every family, all with n <= 18.
inline std::vector<Named> corpus() {
  std::vector<Named> c;
  for (std::size_t n : {1, 2, 3, 5, 8, 12, 18}) c.push_back({"path" + std::to_string(n), gen::path(n)});
  for (std::size_t n : {3, 4, 6, 9, 12}) c.push_back({"cycle" + std::to_string(n), gen::cycle(n)});
  for (std::size_t n : {3, 5, 10}) c.push_back({"star" + std::to_string(n), gen::star(n)});
  for (std::size_t n : {2, 4, 6}) c.push_back({"complete" + std::to_string(n), gen::complete(n)});
  for (auto [a, b] : {std::pair{2, 3}, {3, 3}, {3, 4}, {4, 4}}) {
    c.push_back({"grid" + std::to_string(a) + "x" + std::to_string(b), gen::grid(a, b)});
  }
  for (std::uint64_t seed : {1, 2, 3}) {
    c.push_back({"random_tree12_s" + std::to_string(seed), gen::random_tree(12, seed)});
  }
  c.push_back({"random_tree18", gen::random_tree(18, 11)});
  for (auto [n, k, p, seed] : {std::tuple{10, 2, 1.0, 7}, {12, 2, 0.8, 3}, {14, 3, 0.7, 5}, {18, 2, 0.9, 9}}) {
    c.push_back({"partial_" + std::to_string(k) + "tree" + std::to_string(n) + "_s" + std::to_string(seed),
                 gen::partial_ktree(n, k, p, seed)});
  }
  c.push_back({"edgeless4", gen::edgeless(4)});
  c.push_back({"disconnected", disconnected_sample()});
  return c;
}

inline LinearOrder random_order(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  std::shuffle(seq.begin(), seq.end(), rng);
  return LinearOrder::from_sequence(std::move(seq));
}

/// Graph on ids 1..n whose edge set is given by the bits of `mask` over the
/// pairs (i, j), i < j, in lexicographic order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<IdPair> edges;
  std::size_t bit = 0;
  for (ExternalId i = 1; i <= static_cast<ExternalId>(n); ++i) {
    for (ExternalId j = i + 1; j <= static_cast<ExternalId>(n); ++j, ++bit) {
      if (mask >> bit & 1) edges.emplace_back(i, j);
    }
  }
  std::vector<ExternalId> ids(n);
  std::iota(ids.begin(), ids.end(), 1);
  return Graph::from_edges(edges, ids);
}

inline std::uint64_t graph_count(std::size_t n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  std::uint64_t mask = 0;
  for (std::size_t b = 0; b < n * (n - 1) / 2; ++b) {
    if (keep(rng)) mask |= std::uint64_t{1} << b;
  }
  return graph_from_mask(n, mask);
}

/// Vertices by external id, for readable expectations.
inline VertexSet by_ids(const Graph& g, std::initializer_list<ExternalId> ids) {
  VertexSet out;
  for (auto id : ids) out.push_back(*g.vertex_of(id));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ExternalId> to_ids(const Graph& g, std::span<const Vertex> vs) {
  std::vector<ExternalId> out;
  for (Vertex v : vs) out.push_back(g.id(v));
  return out;
}

/// Plain BFS distances, written independently of the library.
inline std::vector<int> bfs(const Graph& g, Vertex s) {
  std::vector<int> d(g.size(), -1);
  std::vector<Vertex> q{s};
  d[s] = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (Vertex y : g.neighbors(q[i])) {
      if (d[y] < 0) {
        d[y] = d[q[i]] + 1;
        q.push_back(y);
      }
    }
  }
  return d;
}

}  // namespace rdom::test
