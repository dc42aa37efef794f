#include "rdom/connect.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "lex_bfs.hpp"
#include "rdom/error.hpp"

namespace rdom {

namespace {

void lex_search(const Graph& g, detail::LexBfs& bfs, Vertex source, int depth) {
  bfs.run(source, depth, [&](Vertex x, auto&& emit) {
    for (Vertex y : g.neighbors(x)) emit(y);
  });
}

VertexSet sorted_unique(std::span<const Vertex> vs) {
  VertexSet out(vs.begin(), vs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_dominating(const Graph& g, std::span<const Vertex> set, int r) {
  Vertex witness = 0;
  if (!is_distance_dominating(g, set, r, &witness)) {
    throw PreconditionError("vertex " + std::to_string(g.id(witness)) + " is not distance-" +
                            std::to_string(r) + " dominated");
  }
}

}  // namespace

std::optional<Path> lex_shortest_path(const Graph& g, Vertex v, Vertex w, int max_len) {
  if (max_len < 0) return std::nullopt;
  detail::LexBfs bfs(g.size());
  lex_search(g, bfs, v, max_len);
  if (!bfs.reached(w)) return std::nullopt;
  Path p;
  bfs.path_to(w, p);
  return p;
}

std::size_t DPartition::index_of(Vertex center) const {
  const auto it = std::lower_bound(centers.begin(), centers.end(), center);
  if (it == centers.end() || *it != center) throw InvalidArgument("not a center of this partition");
  return static_cast<std::size_t>(it - centers.begin());
}

DPartition d_partition(const Graph& g, std::span<const Vertex> dominators, int r, Exec exec) {
  if (r < 0) throw InvalidArgument("radius must be non-negative");
  DPartition part;
  part.r = r;
  part.centers = sorted_unique(dominators);
  require_dominating(g, part.centers, r);

  // P(v, w) is decided by length first and then by its first vertex v, so
  // the owner of w is the nearest center with the smallest id. A layered
  // multi-source BFS propagates exactly that.
  const std::size_t n = g.size();
  std::vector<int> dist(n, kInfinity);
  part.owner.assign(n, 0);
  std::vector<Vertex> layer(part.centers.begin(), part.centers.end());
  for (Vertex c : layer) {
    dist[c] = 0;
    part.owner[c] = c;
  }
  for (int d = 0; !layer.empty(); ++d) {
    std::vector<Vertex> next;
    for (Vertex x : layer) {
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == kInfinity) {
          dist[y] = d + 1;
          part.owner[y] = part.owner[x];
          next.push_back(y);
        } else if (dist[y] == d + 1) {
          part.owner[y] = std::min(part.owner[y], part.owner[x]);
        }
      }
    }
    layer = std::move(next);
  }

  part.blocks.assign(part.centers.size(), {});
  for (Vertex w = 0; w < n; ++w) part.blocks[part.index_of(part.owner[w])].push_back(w);

  part.lex_paths.assign(n, {});
  part.block_radius.assign(part.centers.size(), 0);
  const auto one = [&](std::int64_t i, detail::LexBfs& bfs) {
    const Vertex c = part.centers[i];
    lex_search(g, bfs, c, r);
    for (Vertex w : part.blocks[i]) bfs.path_to(w, part.lex_paths[w]);
    part.block_radius[i] = induced_eccentricity(g, part.blocks[i], c);
  };
  const auto count = static_cast<std::int64_t>(part.centers.size());
  if (exec == Exec::parallel) {
#pragma omp parallel
    {
      detail::LexBfs bfs(n);
#pragma omp for schedule(dynamic, 8)
      for (std::int64_t i = 0; i < count; ++i) one(i, bfs);
    }
  } else {
    detail::LexBfs bfs(n);
    for (std::int64_t i = 0; i < count; ++i) one(i, bfs);
  }
  return part;
}

double MinorGraph::density() const {
  return vertices.empty() ? 0.0 : 2.0 * static_cast<double>(edges.size()) / static_cast<double>(vertices.size());
}

bool MinorGraph::connected() const {
  if (vertices.empty()) return true;
  std::vector<IdPair> as_ids;
  for (const auto& [u, v] : edges) as_ids.emplace_back(u, v);
  std::vector<ExternalId> ids(vertices.begin(), vertices.end());
  const Graph h = Graph::from_edges(as_ids, ids);
  return connected_components(h).count == 1;
}

MinorGraph contract_minor(const Graph& g, const DPartition& partition) {
  MinorGraph h;
  h.vertices = partition.centers;
  for (const auto& [x, y] : g.edges()) {
    const Vertex a = partition.owner[x];
    const Vertex b = partition.owner[y];
    if (a != b) h.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(h.edges.begin(), h.edges.end());
  h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
  return h;
}

ConnectedResult connect_via_wreach(const Graph& g, const LinearOrder& order, std::span<const Vertex> dominators,
                                   int r, const WReachTable& table) {
  if (r < 0) throw InvalidArgument("radius must be non-negative");
  if (table.radius() != 2 * r + 1 || table.size() != g.size() || order.size() != g.size()) {
    throw PreconditionError("connect_via_wreach needs the WReach table of radius 2r+1 for this graph");
  }
  ConnectedResult result;
  result.r = r;
  result.dominators = sorted_unique(dominators);
  require_dominating(g, result.dominators, r);
  result.components = connected_components(g).count;

  std::vector<Vertex> members(result.dominators.begin(), result.dominators.end());
  for (Vertex v : result.dominators) {
    for (const auto& e : table.entries(v)) {
      if (e.target == v) continue;
      const auto p = table.path(e);
      result.added_paths.emplace_back(p.begin(), p.end());
      members.insert(members.end(), p.begin(), p.end());
    }
  }
  result.connected = sorted_unique(members);
  result.size_bound = result.dominators.size() * (1 + (2 * static_cast<std::size_t>(r) + 1) * wcol_value(table));
  return result;
}

ConnectedResult connect_via_minor(const Graph& g, std::span<const Vertex> dominators, int r, Exec exec) {
  ConnectedResult result;
  result.r = r;
  const auto partition = d_partition(g, dominators, r, exec);
  result.dominators = partition.centers;
  result.components = connected_components(g).count;
  MinorGraph h = contract_minor(g, partition);

  const auto count = static_cast<std::int64_t>(h.edges.size());
  result.added_paths.assign(h.edges.size(), {});
  const auto one = [&](std::int64_t i, detail::LexBfs& bfs) {
    const auto [u, v] = h.edges[i];
    lex_search(g, bfs, u, 2 * r + 1);
    if (!bfs.reached(v)) {
      throw std::logic_error("minor-adjacent centers " + std::to_string(g.id(u)) + " and " +
                             std::to_string(g.id(v)) + " are farther apart than 2r+1");
    }
    bfs.path_to(v, result.added_paths[i]);
  };
  if (exec == Exec::parallel) {
    std::string failure;
#pragma omp parallel
    {
      detail::LexBfs bfs(g.size());
#pragma omp for schedule(dynamic, 8)
      for (std::int64_t i = 0; i < count; ++i) {
        try {
          one(i, bfs);
        } catch (const std::exception& e) {
#pragma omp critical
          failure = e.what();
        }
      }
    }
    if (!failure.empty()) throw std::logic_error(failure);
  } else {
    detail::LexBfs bfs(g.size());
    for (std::int64_t i = 0; i < count; ++i) one(i, bfs);
  }

  std::vector<Vertex> members(result.dominators.begin(), result.dominators.end());
  for (const auto& p : result.added_paths) members.insert(members.end(), p.begin(), p.end());
  result.connected = sorted_unique(members);
  result.size_bound = result.dominators.size() + 2 * static_cast<std::size_t>(r) * h.edges.size();
  result.minor = std::move(h);
  return result;
}

Json connected_to_json(const ConnectedResult& result, const Graph& g) {
  const auto ids = [&](std::span<const Vertex> vs) {
    Json a = Json::array();
    for (Vertex v : vs) a.push_back(g.id(v));
    return a;
  };
  Json j;
  j["r"] = result.r;
  j["D"] = ids(result.dominators);
  j["D_prime"] = ids(result.connected);
  Json paths = Json::array();
  for (const auto& p : result.added_paths) paths.push_back(ids(p));
  j["added_paths"] = std::move(paths);
  if (result.minor) {
    Json edges = Json::array();
    for (const auto& [u, v] : result.minor->edges) edges.push_back({g.id(u), g.id(v)});
    j["minor"] = {{"vertices", ids(result.minor->vertices)}, {"edges", std::move(edges)}};
  }
  Json bounds;
  bounds["D_size"] = result.dominators.size();
  bounds["D_prime_size"] = result.connected.size();
  bounds["size_bound"] = result.size_bound;
  if (result.minor) {
    bounds["minor_edges"] = result.minor->edges.size();
    bounds["minor_density"] = result.minor->density();
    // The looser count that treats each minor edge as 2r-1 interior vertices.
    bounds["interior_2r_minus_1_bound"] =
        result.dominators.size() + (result.r > 0 ? (2 * result.r - 1) : 0) * result.minor->edges.size();
  }
  bounds["components"] = result.components;
  bounds["connected_per_component"] = induces_connected_per_component(g, result.connected);
  j["bounds"] = std::move(bounds);
  return j;
}

std::string connected_to_dot(const ConnectedResult& result, const Graph& g, const DPartition* partition) {
  static constexpr const char* kPalette[] = {"lightblue", "palegreen", "khaki",  "plum",
                                             "lightsalmon", "lightcyan", "wheat", "thistle"};
  std::ostringstream out;
  out << "graph connected_domset {\n  node [style=filled, fillcolor=white];\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    const bool in_d = std::binary_search(result.dominators.begin(), result.dominators.end(), v);
    const bool in_dp = std::binary_search(result.connected.begin(), result.connected.end(), v);
    out << "  " << g.id(v) << " [";
    if (partition) {
      out << "fillcolor=" << kPalette[partition->index_of(partition->owner[v]) % std::size(kPalette)];
    } else if (in_dp) {
      out << "fillcolor=lightblue";
    }
    if (in_d) out << ", penwidth=3";
    if (in_dp) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << g.id(u) << " -- " << g.id(v) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rdom
