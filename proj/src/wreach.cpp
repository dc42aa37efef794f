#include "rdom/wreach.hpp"

#include <algorithm>
#include <sstream>

#include "lex_bfs.hpp"
#include "rdom/error.hpp"

namespace rdom {

std::optional<std::span<const Vertex>> WReachTable::find(Vertex v, Vertex w) const {
  for (const auto& e : entries(v)) {
    if (e.target == w) return path(e);
  }
  return std::nullopt;
}

Vertex WReachTable::min_reachable_within(Vertex v, int length) const {
  for (const auto& e : entries(v)) {
    if (static_cast<int>(e.path_size) - 1 <= length) return e.target;
  }
  return v;  // unreachable: v's own entry has length 0
}

bool operator==(const WReachTable& a, const WReachTable& b) {
  if (a.radius_ != b.radius_ || a.size() != b.size()) return false;
  for (Vertex v = 0; v < a.size(); ++v) {
    const auto ea = a.entries(v);
    const auto eb = b.entries(v);
    if (ea.size() != eb.size()) return false;
    for (std::size_t i = 0; i < ea.size(); ++i) {
      if (ea[i].target != eb[i].target) return false;
      const auto pa = a.path(ea[i]);
      const auto pb = b.path(eb[i]);
      if (!std::equal(pa.begin(), pa.end(), pb.begin(), pb.end())) return false;
    }
  }
  return true;
}

WReachTable::Builder::Builder(std::size_t n, int radius) {
  table_.radius_ = radius;
  table_.offsets_.assign(n + 1, 0);
}

void WReachTable::Builder::begin_vertex(Vertex v) {
  if (v < next_) throw InvalidArgument("WReachTable::Builder: vertices must be added in order");
  for (; next_ <= v; ++next_) table_.offsets_[next_] = table_.entries_.size();
}

void WReachTable::Builder::add(Vertex target, std::span<const Vertex> path) {
  table_.entries_.push_back({target, static_cast<std::uint32_t>(table_.paths_.size()),
                             static_cast<std::uint32_t>(path.size())});
  table_.paths_.insert(table_.paths_.end(), path.begin(), path.end());
}

WReachTable WReachTable::Builder::finish() {
  const std::size_t n = table_.offsets_.size() - 1;
  for (; next_ < n; ++next_) table_.offsets_[next_] = table_.entries_.size();
  table_.offsets_[n] = table_.entries_.size();
  return std::move(table_);
}

namespace {

// Everything one restricted search found: the reached vertices (in BFS
// order) and their certificate paths, concatenated.
struct SourceHits {
  std::vector<Vertex> reached;
  std::vector<std::uint32_t> path_sizes;
  std::vector<Vertex> paths;
};

void search_from(Vertex source, const OrderedAdjacency& adj, const LinearOrder& order, int k,
                 detail::LexBfs& bfs, std::vector<Vertex>& scratch, SourceHits& out) {
  const auto floor = order.rank(source);
  bfs.run(source, k, [&](Vertex x, auto&& emit) {
    const auto nbrs = adj.neighbors(x);
    // Lists are sorted by position; skip everything not above the source.
    const auto first = std::partition_point(nbrs.begin(), nbrs.end(),
                                            [&](Vertex u) { return order.rank(u) <= floor; });
    for (auto it = first; it != nbrs.end(); ++it) emit(*it);
  });
  for (Vertex x : bfs.visited()) {
    bfs.path_to(x, scratch);
    out.reached.push_back(x);
    out.path_sizes.push_back(static_cast<std::uint32_t>(scratch.size()));
    out.paths.insert(out.paths.end(), scratch.begin(), scratch.end());
  }
}

}  // namespace

WReachTable wreach(const Graph& g, const LinearOrder& order, int k, Exec exec) {
  if (k < 0) throw InvalidArgument("wreach radius must be non-negative");
  if (order.size() != g.size()) throw InvalidArgument("order size does not match graph");
  const std::size_t n = g.size();
  const auto adj = sort_adjacency(g, order);

  // hits[p] belongs to the source at position p.
  std::vector<SourceHits> hits(n);
  if (exec == Exec::parallel) {
#pragma omp parallel
    {
      detail::LexBfs bfs(n);
      std::vector<Vertex> scratch;
#pragma omp for schedule(dynamic, 16)
      for (std::int64_t p = 0; p < static_cast<std::int64_t>(n); ++p) {
        const auto pos = static_cast<std::uint32_t>(p);
        search_from(order.at(pos), adj, order, k, bfs, scratch, hits[pos]);
      }
    }
  } else {
    detail::LexBfs bfs(n);
    std::vector<Vertex> scratch;
    for (std::uint32_t p = 0; p < n; ++p) search_from(order.at(p), adj, order, k, bfs, scratch, hits[p]);
  }

  // Invert source -> reached into owner -> entries. Visiting sources by
  // position keeps every owner's entries sorted by target position.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> per_owner(n);  // (source pos, hit index)
  for (std::uint32_t p = 0; p < n; ++p) {
    for (std::uint32_t i = 0; i < hits[p].reached.size(); ++i) per_owner[hits[p].reached[i]].emplace_back(p, i);
  }
  std::vector<std::vector<std::uint32_t>> path_begin(n);
  for (std::uint32_t p = 0; p < n; ++p) {
    auto& begins = path_begin[p];
    begins.resize(hits[p].path_sizes.size());
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < begins.size(); ++i) {
      begins[i] = acc;
      acc += hits[p].path_sizes[i];
    }
  }
  WReachTable::Builder builder(n, k);
  for (Vertex v = 0; v < n; ++v) {
    builder.begin_vertex(v);
    for (const auto& [p, i] : per_owner[v]) {
      const auto& h = hits[p];
      builder.add(order.at(p), std::span<const Vertex>(h.paths).subspan(path_begin[p][i], h.path_sizes[i]));
    }
  }
  return builder.finish();
}

std::size_t wcol_value(const WReachTable& table) {
  std::size_t best = 0;
  for (Vertex v = 0; v < table.size(); ++v) best = std::max(best, table.entries(v).size());
  return best;
}

std::optional<std::string> check_certificates(const Graph& g, const LinearOrder& order,
                                              const WReachTable& table) {
  std::ostringstream why;
  for (Vertex v = 0; v < table.size(); ++v) {
    bool has_self = false;
    std::vector<Vertex> seen;
    for (const auto& e : table.entries(v)) {
      const auto p = table.path(e);
      const Vertex w = e.target;
      if (std::find(seen.begin(), seen.end(), w) != seen.end()) {
        why << "duplicate entry " << g.id(w) << " at vertex " << g.id(v);
        return why.str();
      }
      seen.push_back(w);
      if (p.empty() || p.front() != w || p.back() != v) {
        why << "path for (" << g.id(v) << ", " << g.id(w) << ") has wrong endpoints";
        return why.str();
      }
      if (static_cast<int>(p.size()) - 1 > table.radius()) {
        why << "path for (" << g.id(v) << ", " << g.id(w) << ") exceeds radius";
        return why.str();
      }
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (!g.has_edge(p[i], p[i + 1])) {
          why << "path for (" << g.id(v) << ", " << g.id(w) << ") uses a non-edge";
          return why.str();
        }
      }
      for (std::size_t i = 1; i < p.size(); ++i) {
        if (!order.less(w, p[i])) {
          why << "vertex " << g.id(w) << " is not the minimum of its path to " << g.id(v);
          return why.str();
        }
      }
      has_self = has_self || (w == v && p.size() == 1);
    }
    if (!has_self) {
      why << "vertex " << g.id(v) << " lacks its own entry";
      return why.str();
    }
  }
  return std::nullopt;
}

Json wreach_to_json(const WReachTable& table, const Graph& g) {
  Json entries = Json::object();
  for (Vertex v = 0; v < table.size(); ++v) {
    Json list = Json::array();
    for (const auto& e : table.entries(v)) {
      Json path = Json::array();
      for (Vertex x : table.path(e)) path.push_back(g.id(x));
      list.push_back({{"w", g.id(e.target)}, {"path", std::move(path)}});
    }
    entries[std::to_string(g.id(v))] = std::move(list);
  }
  Json j;
  j["radius"] = table.radius();
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace rdom
