#include "rdom/cover.hpp"

#include <algorithm>
#include <sstream>

#include "rdom/error.hpp"

namespace rdom {

namespace {

void measure(const Graph& g, Cover& cover, Exec exec) {
  const std::size_t n = cover.clusters.size();
  cover.radius.assign(n, 0);
  std::vector<std::size_t> count(g.size(), 0);
  for (const auto& cluster : cover.clusters) {
    for (Vertex w : cluster) ++count[w];
  }
  cover.degree = count.empty() ? 0 : *std::max_element(count.begin(), count.end());
  const auto one = [&](std::int64_t v) {
    cover.radius[v] = induced_eccentricity(g, cover.clusters[v], static_cast<Vertex>(v));
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) one(v);
  } else {
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) one(v);
  }
  cover.max_radius = cover.radius.empty() ? 0 : *std::max_element(cover.radius.begin(), cover.radius.end());
}

}  // namespace

Cover build_cover(const Graph& g, const LinearOrder& order, int r, const WReachTable& table, Exec exec) {
  if (r < 0) throw InvalidArgument("cover radius must be non-negative");
  if (table.radius() != 2 * r || table.size() != g.size()) {
    throw InvalidArgument("build_cover needs the WReach table of radius 2r for the same graph");
  }
  Cover cover;
  cover.r = r;
  cover.order = order;
  cover.clusters.assign(g.size(), {});
  // Owners are visited in index order, so every cluster comes out sorted.
  for (Vertex w = 0; w < g.size(); ++w) {
    for (const auto& e : table.entries(w)) cover.clusters[e.target].push_back(w);
  }
  measure(g, cover, exec);
  return cover;
}

Cover build_cover(const Graph& g, const LinearOrder& order, int r, Exec exec) {
  return build_cover(g, order, r, wreach(g, order, 2 * r, exec), exec);
}

RSets build_rsets(const Graph& g, const LinearOrder& order, int r, const Cover& cover) {
  if (cover.r != r || cover.order != order) throw InvalidArgument("cover was built for different (L, r)");
  const auto table = wreach(g, order, r);
  RSets out;
  out.sets.assign(g.size(), {});
  for (Vertex w = 0; w < g.size(); ++w) {
    const Vertex v = table.min_reachable(w);
    if (std::binary_search(cover.clusters[v].begin(), cover.clusters[v].end(), w)) out.sets[v].push_back(w);
  }
  return out;
}

bool CoverReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

CoverReport verify_cover(const Graph& g, int r, const Cover& cover, Exec exec) {
  const std::size_t n = g.size();
  if (cover.clusters.size() != n || cover.order.size() != n) {
    throw InvalidArgument("cover does not match the graph");
  }
  std::vector<std::vector<Vertex>> containing(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : cover.clusters[v]) containing[w].push_back(v);
  }

  // Per-vertex failure flags, reported for the smallest failing vertex so the
  // report does not depend on scheduling.
  std::vector<char> bad_ball(n, 0), bad_cluster(n, 0), bad_rv(n, 0);
  std::vector<Vertex> rv_owner(n, 0);
  std::vector<int> cluster_ecc(n, 0);
  const auto one = [&](std::int64_t i) {
    const auto v = static_cast<Vertex>(i);
    const auto ball = closed_ball(g, v, r).members;
    bool inside = false;
    for (Vertex c : containing[v]) {
      const auto& x = cover.clusters[c];
      if (std::includes(x.begin(), x.end(), ball.begin(), ball.end())) {
        inside = true;
        break;
      }
    }
    bad_ball[v] = !inside;

    cluster_ecc[v] = induced_eccentricity(g, cover.clusters[v], v);
    bad_cluster[v] = cluster_ecc[v] > 2 * r;

    // min WReach_r[v] is the minimum of N_r[v]; v belongs to R_owner.
    const Vertex owner = *std::min_element(ball.begin(), ball.end(),
                                           [&](Vertex a, Vertex b) { return cover.order.less(a, b); });
    rv_owner[v] = owner;
    const auto& x = cover.clusters[owner];
    bad_rv[v] = !std::includes(x.begin(), x.end(), ball.begin(), ball.end());
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) one(v);
  } else {
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) one(v);
  }

  CoverReport report;
  const auto first = [&](const std::vector<char>& flags) -> std::optional<Vertex> {
    const auto it = std::find(flags.begin(), flags.end(), 1);
    if (it == flags.end()) return std::nullopt;
    return static_cast<Vertex>(it - flags.begin());
  };
  {
    Check c{"ball_in_cluster", true, {}};
    if (const auto v = first(bad_ball)) {
      c.passed = false;
      c.witness = "N_" + std::to_string(r) + "[" + std::to_string(g.id(*v)) + "] lies in no cluster";
    }
    report.checks.push_back(std::move(c));
  }
  {
    Check c{"cluster_radius", true, {}};
    if (const auto v = first(bad_cluster)) {
      c.passed = false;
      std::ostringstream why;
      why << "cluster X_" << g.id(*v) << " has ";
      if (cluster_ecc[*v] == kInfinity) {
        why << "no connected path from its center to every member";
      } else {
        why << "radius " << cluster_ecc[*v] << " > " << 2 * r;
      }
      c.witness = why.str();
    }
    report.checks.push_back(std::move(c));
  }
  {
    Check c{"rv_ball_in_cluster", true, {}};
    if (const auto w = first(bad_rv)) {
      c.passed = false;
      c.witness = std::to_string(g.id(*w)) + " is in R_" + std::to_string(g.id(rv_owner[*w])) + " but N_" +
                  std::to_string(r) + "[" + std::to_string(g.id(*w)) + "] is not inside X_" +
                  std::to_string(g.id(rv_owner[*w]));
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

Json cover_to_json(const Cover& cover, const Graph& g) {
  Json clusters = Json::object();
  for (Vertex v = 0; v < cover.clusters.size(); ++v) {
    Json members = Json::array();
    for (Vertex w : cover.clusters[v]) members.push_back(g.id(w));
    clusters[std::to_string(g.id(v))] = std::move(members);
  }
  Json j;
  j["r"] = cover.r;
  j["clusters"] = std::move(clusters);
  j["degree"] = cover.degree;
  j["max_measured_radius"] = cover.max_radius;
  return j;
}

Cover cover_from_json(const Json& j, const Graph& g, const LinearOrder& order) {
  Cover cover;
  try {
    cover.r = j.at("r").get<int>();
    cover.order = order;
    cover.clusters.assign(g.size(), {});
    for (const auto& [key, members] : j.at("clusters").items()) {
      const auto center = g.vertex_of(std::stoll(key));
      if (!center) throw ParseError("unknown cluster center " + key, 0);
      for (const auto& m : members) {
        const auto w = g.vertex_of(m.get<ExternalId>());
        if (!w) throw ParseError("unknown cluster member " + m.dump(), 0);
        cover.clusters[*center].push_back(*w);
      }
      auto& x = cover.clusters[*center];
      std::sort(x.begin(), x.end());
      x.erase(std::unique(x.begin(), x.end()), x.end());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed cover JSON: ") + e.what(), 0);
  }
  measure(g, cover, Exec::serial);
  return cover;
}

std::string cover_to_dot(const Cover& cover, const Graph& g, Vertex highlighted) {
  std::ostringstream out;
  out << "graph cover {\n  node [style=filled, fillcolor=white];\n";
  const auto& x = cover.clusters.at(highlighted);
  for (Vertex v = 0; v < g.size(); ++v) {
    out << "  " << g.id(v);
    if (v == highlighted) {
      out << " [fillcolor=orange]";
    } else if (std::binary_search(x.begin(), x.end(), v)) {
      out << " [fillcolor=lightblue]";
    }
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << g.id(u) << " -- " << g.id(v) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rdom
