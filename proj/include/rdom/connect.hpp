#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdom/exec.hpp"
#include "rdom/graph.hpp"
#include "rdom/io.hpp"
#include "rdom/order.hpp"
#include "rdom/wreach.hpp"

namespace rdom {

/// Least path from v to w of length <= max_len under the path order "shorter
/// first, then lexicographic by id sequence read from v". Ids order exactly
/// like dense indices.
std::optional<Path> lex_shortest_path(const Graph& g, Vertex v, Vertex w, int max_len = kInfinity);

/// Partition of V(G) around a distance-r dominating set: w belongs to B(v)
/// for the v in D whose least path to w beats that of every other member.
struct DPartition {
  int r = 0;
  VertexSet centers;                 // D, sorted
  std::vector<Vertex> owner;         // owner[w] = the v with w in B(v)
  std::vector<VertexSet> blocks;     // blocks[i] = B(centers[i]), sorted
  std::vector<Path> lex_paths;       // lex_paths[w] = P(owner[w], w)
  std::vector<int> block_radius;     // eccentricity of centers[i] inside G[B]

  std::size_t index_of(Vertex center) const;
};

/// Throws PreconditionError naming an undominated vertex when D is not a
/// distance-r dominating set.
DPartition d_partition(const Graph& g, std::span<const Vertex> dominators, int r, Exec exec = Exec::parallel);

/// Quotient of G by the blocks of a partition.
struct MinorGraph {
  VertexSet vertices;                               // the centers
  std::vector<std::pair<Vertex, Vertex>> edges;     // center pairs (u < v), sorted
  double density() const;                           // 2|E(H)| / |V(H)|
  bool connected() const;
};

MinorGraph contract_minor(const Graph& g, const DPartition& partition);

struct ConnectedResult {
  int r = 0;
  VertexSet dominators;       // D
  VertexSet connected;        // D'
  std::vector<Path> added_paths;
  std::size_t components = 0; // connected components of G
  std::size_t size_bound = 0; // bound the construction guarantees from measured quantities
  std::optional<MinorGraph> minor;  // set by connect_via_minor
};

/// D' = D plus, for every v in D and every w in WReach_2r+1[v], the vertices
/// of the stored path from w to v. `table` must have radius 2r + 1.
/// |D'| <= |D| * (1 + (2r+1) * max|WReach_2r+1|).
ConnectedResult connect_via_wreach(const Graph& g, const LinearOrder& order, std::span<const Vertex> dominators,
                                   int r, const WReachTable& table);

/// D' = D plus, for every edge {u, v} of the contracted minor, the interior
/// of the least path of length <= 2r+1 from the smaller to the larger id.
/// |D'| <= |D| + 2r * |E(H)|.
ConnectedResult connect_via_minor(const Graph& g, std::span<const Vertex> dominators, int r,
                                  Exec exec = Exec::parallel);

/// {D, D_prime, added_paths, minor:{vertices, edges}, bounds:{...}}
Json connected_to_json(const ConnectedResult& result, const Graph& g);
/// Graphviz rendering: D' filled, D bold, blocks coloured when given.
std::string connected_to_dot(const ConnectedResult& result, const Graph& g, const DPartition* partition = nullptr);

}  // namespace rdom
