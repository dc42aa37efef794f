#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rdom {

/// Dense vertex index in 0..n-1.
using Vertex = std::uint32_t;
/// User-facing vertex identifier.
using ExternalId = std::int64_t;
using IdPair = std::pair<ExternalId, ExternalId>;
using VertexSet = std::vector<Vertex>;
using Path = std::vector<Vertex>;

/// Distance marker for disconnected pairs.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Immutable undirected simple graph in CSR form.
///
/// Dense indices are assigned in increasing order of external id, so comparing
/// two vertices by index is the same as comparing their ids. Every adjacency
/// list is sorted by index.
class Graph {
 public:
  Graph() = default;

  /// Builds the canonical graph. Duplicate edges are collapsed; vertices that
  /// appear only in `vertices` become isolated vertices.
  /// Throws InvalidArgument on self-loops or negative ids.
  static Graph from_edges(std::span<const IdPair> edges, std::span<const ExternalId> vertices = {});

  std::size_t size() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  ExternalId id(Vertex v) const noexcept { return ids_[v]; }
  std::span<const ExternalId> ids() const noexcept { return ids_; }
  std::optional<Vertex> vertex_of(ExternalId id) const;

  bool has_edge(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<ExternalId> ids_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// Free-function spelling of Graph::from_edges.
inline Graph build_graph(std::span<const IdPair> edges, std::span<const ExternalId> vertices = {}) {
  return Graph::from_edges(edges, vertices);
}

/// Closed r-neighborhood N_r[center].
struct Ball {
  Vertex center = 0;
  int radius = 0;
  VertexSet members;  // sorted
};

Ball closed_ball(const Graph& g, Vertex v, int r);

/// BFS distances from `source`, truncated at `max_depth` (kInfinity beyond).
std::vector<int> bfs_distances(const Graph& g, Vertex source, int max_depth = kInfinity);

/// Shortest-path length, or kInfinity when u and v are disconnected.
int distance(const Graph& g, Vertex u, Vertex v);

/// Component label per vertex; labels are dense and follow the smallest
/// vertex of each component.
struct Components {
  std::vector<std::uint32_t> label;
  std::size_t count = 0;
};
Components connected_components(const Graph& g);

/// Eccentricity of `center` inside G[members], kInfinity if G[members] is
/// disconnected or `center` is not a member. `members` must be sorted.
int induced_eccentricity(const Graph& g, std::span<const Vertex> members, Vertex center);

/// True iff G[members] is connected; the empty set counts as connected.
bool induces_connected(const Graph& g, std::span<const Vertex> members);

/// Per-component connectivity: every component of G that meets `members`
/// is met by exactly one component of G[members].
bool induces_connected_per_component(const Graph& g, std::span<const Vertex> members);

/// N_r[set] == V(G). On failure `undominated` (if given) receives a witness.
bool is_distance_dominating(const Graph& g, std::span<const Vertex> set, int r,
                            Vertex* undominated = nullptr);

}  // namespace rdom
