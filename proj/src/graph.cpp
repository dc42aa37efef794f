#include "rdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "rdom/error.hpp"

namespace rdom {

Graph Graph::from_edges(std::span<const IdPair> edges, std::span<const ExternalId> vertices) {
  Graph g;
  std::vector<ExternalId> ids(vertices.begin(), vertices.end());
  ids.reserve(ids.size() + 2 * edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) {
      throw InvalidArgument("self-loop (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    ids.push_back(a);
    ids.push_back(b);
  }
  for (ExternalId id : ids) {
    if (id < 0) throw InvalidArgument("negative vertex id " + std::to_string(id));
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  g.ids_ = std::move(ids);

  const auto index = [&](ExternalId id) {
    return static_cast<Vertex>(std::lower_bound(g.ids_.begin(), g.ids_.end(), id) - g.ids_.begin());
  };
  std::vector<std::pair<Vertex, Vertex>> arcs;
  arcs.reserve(2 * edges.size());
  for (const auto& [a, b] : edges) {
    const Vertex u = index(a);
    const Vertex v = index(b);
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  const std::size_t n = g.ids_.size();
  g.offsets_.assign(n + 1, 0);
  for (const auto& arc : arcs) ++g.offsets_[arc.first + 1];
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adjacency_.reserve(arcs.size());
  for (const auto& arc : arcs) g.adjacency_.push_back(arc.second);
  return g;
}

std::optional<Vertex> Graph::vertex_of(ExternalId id) const {
  const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<Vertex>(it - ids_.begin());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source, int max_depth) {
  std::vector<int> dist(g.size(), kInfinity);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (dist[x] >= max_depth) continue;
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kInfinity) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

Ball closed_ball(const Graph& g, Vertex v, int r) {
  Ball ball{v, r, {}};
  const auto dist = bfs_distances(g, v, r);
  for (Vertex u = 0; u < g.size(); ++u) {
    if (dist[u] <= r) ball.members.push_back(u);
  }
  return ball;
}

int distance(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return 0;
  return bfs_distances(g, u)[v];
}

Components connected_components(const Graph& g) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  Components c;
  c.label.assign(g.size(), kUnset);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (c.label[s] != kUnset) continue;
    const auto label = static_cast<std::uint32_t>(c.count++);
    c.label[s] = label;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (c.label[y] == kUnset) {
          c.label[y] = label;
          stack.push_back(y);
        }
      }
    }
  }
  return c;
}

namespace {

// BFS inside G[members]; returns distance per member position (kInfinity if unreached).
std::vector<int> induced_bfs(const Graph& g, std::span<const Vertex> members, Vertex source) {
  std::vector<int> dist(members.size(), kInfinity);
  const auto pos = [&](Vertex v) -> std::ptrdiff_t {
    const auto it = std::lower_bound(members.begin(), members.end(), v);
    return (it != members.end() && *it == v) ? it - members.begin() : -1;
  };
  const auto s = pos(source);
  if (s < 0) return dist;
  std::deque<Vertex> queue{source};
  dist[s] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    const int dx = dist[pos(x)];
    for (Vertex y : g.neighbors(x)) {
      const auto py = pos(y);
      if (py >= 0 && dist[py] == kInfinity) {
        dist[py] = dx + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace

int induced_eccentricity(const Graph& g, std::span<const Vertex> members, Vertex center) {
  if (!std::binary_search(members.begin(), members.end(), center)) return kInfinity;
  const auto dist = induced_bfs(g, members, center);
  return *std::max_element(dist.begin(), dist.end());
}

bool induces_connected(const Graph& g, std::span<const Vertex> members) {
  if (members.empty()) return true;
  return induced_eccentricity(g, members, members.front()) != kInfinity;
}

bool induces_connected_per_component(const Graph& g, std::span<const Vertex> members) {
  const auto comps = connected_components(g);
  std::vector<std::vector<Vertex>> parts(comps.count);
  for (Vertex v : members) parts[comps.label[v]].push_back(v);
  return std::all_of(parts.begin(), parts.end(),
                     [&](const auto& part) { return induces_connected(g, part); });
}

bool is_distance_dominating(const Graph& g, std::span<const Vertex> set, int r, Vertex* undominated) {
  // Multi-source BFS from the whole set.
  std::vector<int> dist(g.size(), kInfinity);
  std::deque<Vertex> queue;
  for (Vertex v : set) {
    if (dist[v] != 0) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (dist[x] >= r) continue;
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kInfinity) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    if (dist[v] > r) {
      if (undominated) *undominated = v;
      return false;
    }
  }
  return true;
}

}  // namespace rdom
