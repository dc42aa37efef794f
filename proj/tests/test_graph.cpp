#include <doctest.h>

#include <sstream>

#include "rdom/error.hpp"
#include "rdom/generators.hpp"
#include "rdom/graph.hpp"
#include "rdom/io.hpp"
#include "rdom/order.hpp"
#include "support.hpp"

using namespace rdom;
using rdom::test::by_ids;
using rdom::test::from_pairs;

TEST_SUITE("graph") {
  TEST_CASE("build_graph canonical form") {
    const Graph p3 = from_pairs({{1, 2}, {2, 3}});
    CHECK(p3.size() == 3);
    CHECK(p3.edge_count() == 2);

    const Graph dup = from_pairs({{1, 2}, {2, 1}});
    CHECK(dup.size() == 2);
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(from_pairs({{1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(from_pairs({{-1, 2}}), InvalidArgument);
  }

  TEST_CASE("dense indices follow external ids") {
    const Graph g = from_pairs({{30, 10}, {10, 20}});
    CHECK(g.id(0) == 10);
    CHECK(g.id(1) == 20);
    CHECK(g.id(2) == 30);
    CHECK(g.vertex_of(20) == Vertex{1});
    CHECK_FALSE(g.vertex_of(99).has_value());
    CHECK(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(1, 2));
  }

  TEST_CASE("isolated vertices only through the vertex list") {
    const Graph g = from_pairs({{1, 2}}, {5});
    CHECK(g.size() == 3);
    CHECK(g.degree(*g.vertex_of(5)) == 0);
  }

  TEST_CASE("closed_ball examples") {
    const Graph p3 = gen::path(3);
    CHECK(closed_ball(p3, 0, 0).members == VertexSet{0});
    CHECK(closed_ball(p3, 1, 1).members == VertexSet{0, 1, 2});
    const Graph c6 = gen::cycle(6);
    CHECK(closed_ball(c6, 0, 2).members.size() == 5);
  }

  TEST_CASE("distance examples") {
    const Graph p3 = gen::path(3);
    CHECK(distance(p3, 1, 1) == 0);
    CHECK(distance(p3, 0, 2) == 2);
    const Graph two = from_pairs({{1, 2}, {3, 4}});
    CHECK(distance(two, 0, 3) == kInfinity);
  }

  TEST_CASE("generators") {
    CHECK(gen::path(5).edge_count() == 4);
    const Graph grid = gen::grid(3, 3);
    CHECK(grid.size() == 9);
    CHECK(grid.edge_count() == 12);
    CHECK(gen::star(5).degree(0) == 4);
    CHECK(gen::complete(5).edge_count() == 10);
    CHECK(gen::cycle(6).edge_count() == 6);
    CHECK(gen::random_tree(20, 3).edge_count() == 19);
    CHECK(gen::random_tree(20, 3) == gen::random_tree(20, 3));
    CHECK(gen::partial_ktree(30, 2, 0.8, 4) == gen::partial_ktree(30, 2, 0.8, 4));
    CHECK(degeneracy(gen::partial_ktree(10, 2, 1.0, 7)) <= 2);
    CHECK_THROWS_AS(gen::by_name("grid", {3}, 1), InvalidArgument);
    CHECK_THROWS_AS(gen::by_name("path", {0}, 1), InvalidArgument);
    CHECK_THROWS_AS(gen::by_name("nope", {3}, 1), InvalidArgument);
  }

  TEST_CASE("edge-list parsing") {
    std::istringstream in("# a comment\nvertices: 1, 2, 7\n1 2  # trailing\n\n2 3\n");
    const Graph g = parse_edge_list(in);
    CHECK(g.size() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(*g.vertex_of(7)) == 0);

    std::istringstream bad("1 2\n2 x\n");
    try {
      parse_edge_list(bad);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    std::istringstream loop("1 2\n3 3\n");
    try {
      parse_edge_list(loop);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("self-loop (3, 3)") != std::string::npos);
    }
    std::istringstream three("1 2 3\n");
    CHECK_THROWS_AS(parse_edge_list(three), ParseError);
  }

  TEST_CASE("serialization round trips") {
    for (const auto& [name, g] : test::corpus()) {
      CAPTURE(name);
      std::ostringstream text;
      write_edge_list(g, text);
      std::istringstream in(text.str());
      CHECK(parse_edge_list(in) == g);
      CHECK(graph_from_json(graph_to_json(g)) == g);
    }
    const Json j = graph_to_json(from_pairs({{3, 1}, {2, 1}}));
    CHECK(j.dump() == R"({"n":3,"edges":[[1,2],[1,3]],"ids":[1,2,3]})");
  }

  TEST_CASE("ball and distance properties") {
    for (const auto& [name, g] : test::corpus()) {
      CAPTURE(name);
      std::vector<std::vector<int>> d;
      for (Vertex v = 0; v < g.size(); ++v) d.push_back(test::bfs(g, v));
      for (Vertex v = 0; v < g.size(); ++v) {
        auto expected = d[v];
        for (int& x : expected) x = x < 0 ? kInfinity : x;
        CHECK(bfs_distances(g, v) == expected);
        for (int r = 0; r <= 3; ++r) {
          const auto ball = closed_ball(g, v, r).members;
          const auto bigger = closed_ball(g, v, r + 1).members;
          CHECK(std::includes(bigger.begin(), bigger.end(), ball.begin(), ball.end()));
          for (Vertex u = 0; u < g.size(); ++u) {
            const bool in_ball = std::binary_search(ball.begin(), ball.end(), u);
            CHECK(in_ball == (d[v][u] >= 0 && d[v][u] <= r));
            const auto other = closed_ball(g, u, r).members;
            CHECK(in_ball == std::binary_search(other.begin(), other.end(), v));
          }
        }
        for (Vertex u = 0; u < g.size(); ++u) {
          for (Vertex w = 0; w < g.size(); ++w) {
            const int uv = distance(g, u, v), vw = distance(g, v, w), uw = distance(g, u, w);
            if (uv != kInfinity && vw != kInfinity) CHECK(uw <= uv + vw);
          }
        }
      }
    }
  }

  TEST_CASE("components and induced connectivity") {
    const Graph g = test::disconnected_sample();
    const auto comps = connected_components(g);
    CHECK(comps.count == 3);
    CHECK(induces_connected(g, by_ids(g, {1, 2, 3})));
    CHECK_FALSE(induces_connected(g, by_ids(g, {1, 3})));
    CHECK(induces_connected(g, {}));
    CHECK(induces_connected_per_component(g, by_ids(g, {2, 4, 5, 8})));
    CHECK_FALSE(induces_connected_per_component(g, by_ids(g, {1, 3, 4})));
    CHECK(induced_eccentricity(g, by_ids(g, {4, 5, 6, 7}), *g.vertex_of(4)) == 2);
    CHECK(induced_eccentricity(g, by_ids(g, {4, 6}), *g.vertex_of(4)) == kInfinity);

    Vertex witness = 0;
    CHECK(is_distance_dominating(g, by_ids(g, {2, 4, 6, 8}), 1));
    CHECK_FALSE(is_distance_dominating(g, by_ids(g, {2, 4, 6}), 1, &witness));
    CHECK(g.id(witness) == 8);
  }
}
