#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdom/exec.hpp"
#include "rdom/graph.hpp"
#include "rdom/io.hpp"
#include "rdom/order.hpp"
#include "rdom/wreach.hpp"

namespace rdom {

/// r-neighbourhood cover built from an order: X_v is the set of vertices w
/// with v in WReach_2r[w]. One cluster per vertex; singleton clusters are kept.
struct Cover {
  int r = 0;
  LinearOrder order;
  std::vector<VertexSet> clusters;  // clusters[v] = X_v, sorted
  std::size_t degree = 0;           // max number of clusters containing a vertex
  std::vector<int> radius;          // eccentricity of v inside G[X_v]
  int max_radius = 0;
};

/// Clusters by inverting the 2r table. `table` must have radius 2r.
Cover build_cover(const Graph& g, const LinearOrder& order, int r, const WReachTable& table,
                  Exec exec = Exec::parallel);
Cover build_cover(const Graph& g, const LinearOrder& order, int r, Exec exec = Exec::parallel);

/// R_v = { w in X_v : v = min WReach_r[w] }; the R_v partition V(G).
struct RSets {
  std::vector<VertexSet> sets;  // sets[v] = R_v, sorted
};

RSets build_rsets(const Graph& g, const LinearOrder& order, int r, const Cover& cover);

/// Outcome of one named check; `witness` explains the first failure.
struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct CoverReport {
  std::vector<Check> checks;
  bool passed() const;
};

/// Checks (a) every N_r[v] lies inside some cluster, (b) every cluster X_v
/// contains v and has eccentricity <= 2r from v inside G[X_v], (c) for all
/// v and w in R_v, N_r[w] is inside X_v. R_v is recomputed here from the
/// minimum of N_r[w], independently of any table.
CoverReport verify_cover(const Graph& g, int r, const Cover& cover, Exec exec = Exec::parallel);

/// {r, clusters: {v: [...]}, degree, max_measured_radius}
Json cover_to_json(const Cover& cover, const Graph& g);
/// Reads the clusters (and r) back; degree and radii are recomputed. The
/// order is taken from `order`.
Cover cover_from_json(const Json& j, const Graph& g, const LinearOrder& order);

/// Graphviz rendering with the vertices of one cluster highlighted.
std::string cover_to_dot(const Cover& cover, const Graph& g, Vertex highlighted);

}  // namespace rdom
