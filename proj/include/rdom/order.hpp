#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rdom/graph.hpp"

namespace rdom {

/// Total order on V(G). Positions are 0-based internally; the super-id of a
/// vertex is its position plus one.
class LinearOrder {
 public:
  LinearOrder() = default;

  /// Order by dense index (equivalently by external id).
  static LinearOrder identity(std::size_t n);
  /// `sequence[p]` is the vertex at position p. Throws InvalidArgument unless
  /// it is a permutation of 0..n-1.
  static LinearOrder from_sequence(std::vector<Vertex> sequence);

  std::size_t size() const noexcept { return sequence_.size(); }
  std::uint32_t rank(Vertex v) const noexcept { return rank_[v]; }
  std::uint32_t super_id(Vertex v) const noexcept { return rank_[v] + 1; }
  Vertex at(std::uint32_t position) const noexcept { return sequence_[position]; }
  std::span<const Vertex> sequence() const noexcept { return sequence_; }
  std::span<const std::uint32_t> ranks() const noexcept { return rank_; }
  bool less(Vertex a, Vertex b) const noexcept { return rank_[a] < rank_[b]; }

  friend bool operator==(const LinearOrder&, const LinearOrder&) = default;

 private:
  std::vector<Vertex> sequence_;
  std::vector<std::uint32_t> rank_;
};

/// Degeneracy peeling: repeatedly remove a vertex of minimum remaining degree
/// and place it last among the unplaced positions. Among equal degrees the
/// largest id is removed first, so ties end up in increasing id order.
/// Every vertex then has at most degeneracy(G) smaller neighbours.
LinearOrder degeneracy_order(const Graph& g);

/// Degeneracy as measured by the same peeling process.
int degeneracy(const Graph& g);

/// max over v of the number of neighbours placed before v.
int max_smaller_neighbors(const Graph& g, const LinearOrder& order);

/// Order used as the weak-colouring witness for radius k (k >= 1). Currently
/// the degeneracy order, independent of k; downstream guarantees are
/// certified from the measured wcol value, not from order quality.
LinearOrder heuristic_wcol_order(const Graph& g, int k);

/// Adjacency lists sorted increasingly along an order.
class OrderedAdjacency {
 public:
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t size() const noexcept { return offsets_.size() - 1; }

 private:
  friend OrderedAdjacency sort_adjacency(const Graph& g, const LinearOrder& order);
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// Two-pass bucket sort of all adjacency lists along `order`, O(n + m):
/// walk the vertices in order and append each to the lists of its neighbours.
OrderedAdjacency sort_adjacency(const Graph& g, const LinearOrder& order);

/// Order files list external ids from the smallest to the largest position,
/// separated by whitespace; `#` starts a comment.
LinearOrder read_order(std::istream& in, const Graph& g);
void write_order(const LinearOrder& order, const Graph& g, std::ostream& out);

}  // namespace rdom
