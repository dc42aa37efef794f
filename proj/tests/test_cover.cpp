#include <doctest.h>

#include <random>

#include "rdom/cover.hpp"
#include "rdom/generators.hpp"
#include "rdom/oracle.hpp"
#include "support.hpp"

using namespace rdom;
using rdom::test::by_ids;

namespace {

// BFS from v inside G[members]; returns the largest distance or -1 if some
// member is unreachable.
int inner_eccentricity(const Graph& g, const VertexSet& members, Vertex v) {
  std::vector<int> d(g.size(), -1);
  std::vector<char> in(g.size(), 0);
  for (Vertex x : members) in[x] = 1;
  if (!in[v]) return -1;
  std::vector<Vertex> q{v};
  d[v] = 0;
  int ecc = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (Vertex y : g.neighbors(q[i])) {
      if (in[y] && d[y] < 0) {
        d[y] = d[q[i]] + 1;
        ecc = std::max(ecc, d[y]);
        q.push_back(y);
      }
    }
  }
  return q.size() == members.size() ? ecc : -1;
}

VertexSet ball(const Graph& g, Vertex v, int r) {
  const auto d = test::bfs(g, v);
  VertexSet out;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (d[u] >= 0 && d[u] <= r) out.push_back(u);
  }
  return out;
}

}  // namespace

TEST_SUITE("cover") {
  TEST_CASE("build_cover examples") {
    const Graph k5 = gen::complete(5);
    std::mt19937_64 rng(3);
    const auto order = test::random_order(5, rng);
    const auto cover = build_cover(k5, order, 1);
    CHECK(cover.clusters[order.at(0)].size() == 5);

    const auto empty = build_cover(gen::edgeless(4), LinearOrder::identity(4), 1);
    for (Vertex v = 0; v < 4; ++v) CHECK(empty.clusters[v] == VertexSet{v});
    CHECK(empty.degree == 1);

    const Graph p5 = gen::path(5);
    const auto natural = LinearOrder::identity(5);
    CHECK(build_cover(p5, natural, 1).degree == wcol_value(oracle::wreach_bruteforce(p5, natural, 2)));
    CHECK(build_cover(p5, natural, 1).degree == 3);
  }

  TEST_CASE("build_rsets examples") {
    const Graph star = gen::star(6);
    const auto center_first = LinearOrder::identity(6);
    const auto rs = build_rsets(star, center_first, 1, build_cover(star, center_first, 1));
    CHECK(rs.sets[0] == VertexSet{0, 1, 2, 3, 4, 5});

    const Graph e = gen::edgeless(3);
    const auto re = build_rsets(e, LinearOrder::identity(3), 1, build_cover(e, LinearOrder::identity(3), 1));
    for (Vertex v = 0; v < 3; ++v) CHECK(re.sets[v] == VertexSet{v});

    const Graph p3 = gen::path(3);
    const auto natural = LinearOrder::identity(3);
    const auto r3 = build_rsets(p3, natural, 1, build_cover(p3, natural, 1));
    CHECK(r3.sets[0] == VertexSet{0, 1});
    CHECK(r3.sets[1] == VertexSet{2});
    CHECK(r3.sets[2].empty());
  }

  TEST_CASE("verify_cover examples and mutation") {
    const Graph p5 = gen::path(5);
    const auto natural = LinearOrder::identity(5);
    const auto cover = build_cover(p5, natural, 1);
    const auto report = verify_cover(p5, 1, cover);
    REQUIRE(report.checks.size() == 3);
    for (const auto& c : report.checks) CHECK_MESSAGE(c.passed, c.name);

    // X_1 is the only cluster holding N_1[2] = {1,2,3}; drop 3 from it.
    auto broken = cover;
    auto& x = broken.clusters[0];
    x.erase(std::find(x.begin(), x.end(), 2));
    const auto bad = verify_cover(p5, 1, broken);
    CHECK_FALSE(bad.passed());
    CHECK_FALSE(bad.checks[0].passed);
    CHECK(bad.checks[0].witness.find("N_1[2]") != std::string::npos);

    // A disconnected cluster fails the radius check.
    auto split = cover;
    split.clusters[0] = by_ids(p5, {1, 3});
    const auto report2 = verify_cover(p5, 1, split);
    CHECK_FALSE(report2.checks[1].passed);
  }

  TEST_CASE("cover properties on the corpus") {
    std::mt19937_64 rng(29);
    for (const auto& [name, g] : test::corpus()) {
      CAPTURE(name);
      for (int r = 1; r <= 2; ++r) {
        for (int trial = 0; trial < 2; ++trial) {
          const auto order = trial == 0 ? degeneracy_order(g) : test::random_order(g.size(), rng);
          const auto table = wreach(g, order, 2 * r);
          const auto cover = build_cover(g, order, r, table);
          CHECK(build_cover(g, order, r, table, Exec::serial).clusters == cover.clusters);
          CHECK(cover.degree == wcol_value(table));
          CHECK(verify_cover(g, r, cover).passed());
          for (Vertex v = 0; v < g.size(); ++v) {
            const int ecc = inner_eccentricity(g, cover.clusters[v], v);
            CHECK(ecc >= 0);
            CHECK(ecc <= 2 * r);
            CHECK(cover.radius[v] == ecc);
          }
          // Cluster membership straight from the definition on small graphs.
          if (g.size() <= 10) {
            const auto brute = oracle::wreach_bruteforce(g, order, 2 * r);
            std::vector<VertexSet> expect(g.size());
            for (Vertex w = 0; w < g.size(); ++w) {
              for (const auto& e : brute.entries(w)) expect[e.target].push_back(w);
            }
            CHECK(expect == cover.clusters);
          }
          // R_v partition V(G), and N_r[w] lies in X_v for w in R_v.
          const auto rs = build_rsets(g, order, r, cover);
          std::vector<int> hits(g.size(), 0);
          for (Vertex v = 0; v < g.size(); ++v) {
            const auto& x = cover.clusters[v];
            CHECK(std::includes(x.begin(), x.end(), rs.sets[v].begin(), rs.sets[v].end()));
            for (Vertex w : rs.sets[v]) {
              ++hits[w];
              const auto b = ball(g, w, r);
              CHECK(std::includes(x.begin(), x.end(), b.begin(), b.end()));
              Vertex least = w;
              for (Vertex u : b) least = order.less(u, least) ? u : least;
              CHECK(least == v);
            }
          }
          CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        }
      }
    }
  }

  TEST_CASE("cover json round trip") {
    const Graph g = gen::grid(3, 3);
    const auto order = degeneracy_order(g);
    const auto cover = build_cover(g, order, 1);
    const auto back = cover_from_json(cover_to_json(cover, g), g, order);
    CHECK(back.clusters == cover.clusters);
    CHECK(back.degree == cover.degree);
    CHECK(back.max_radius == cover.max_radius);
    const auto dot = cover_to_dot(cover, g, 0);
    CHECK(dot.rfind("graph cover {", 0) == 0);
  }
}
