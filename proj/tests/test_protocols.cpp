#include <doctest.h>

#include <random>

#include "rdom/connect.hpp"
#include "rdom/domset.hpp"
#include "rdom/generators.hpp"
#include "rdom/protocols.hpp"
#include "support.hpp"

using namespace rdom;
using rdom::test::by_ids;

namespace {

// CONGEST_BC with the cap set to the congestion bound for certificate c.
SimModel bounded_model(std::size_t c, int r) {
  return SimModel::congest_bc(16.0 * static_cast<double>(c * c) * std::max(r, 1));
}

std::vector<std::pair<std::string, LinearOrder>> orders_for(const Graph& g, int k, std::mt19937_64& rng) {
  return {{"heuristic", heuristic_wcol_order(g, std::max(k, 1))},
          {"degeneracy", degeneracy_order(g)},
          {"random", test::random_order(g.size(), rng)}};
}

}  // namespace

TEST_SUITE("protocols") {
  TEST_CASE("congestion bound") {
    CHECK(congestion_bound(16, 3, 1, 16) == 16 * 9 * 4);
    CHECK(congestion_bound(1, 1, 1, 2) == 1);
  }

  TEST_CASE("wreach protocol examples") {
    const Graph e = gen::edgeless(5);
    const auto res = protocol_wreach_dist(e, LinearOrder::identity(5), 2, SimModel::congest_bc());
    CHECK(res.max_set_size == 1);
    CHECK(res.trace.total_rounds() == 2);
    for (const auto& round : res.trace.rounds) CHECK(round.deliveries == 0);

    const Graph p3 = gen::path(3);
    const auto natural = LinearOrder::identity(3);
    const auto t = protocol_wreach_dist(p3, natural, 2, SimModel::congest_bc()).table;
    CHECK(t == wreach(p3, natural, 2));
    const auto path = t.find(2, 0);
    REQUIRE(path.has_value());
    CHECK(std::vector<Vertex>(path->begin(), path->end()) == std::vector<Vertex>{0, 1, 2});
    CHECK(t.entries(2).size() == 3);
  }

  TEST_CASE("domset protocol examples") {
    const Graph star = gen::star(6);
    CHECK(protocol_domset(star, LinearOrder::identity(6), 1, SimModel::congest_bc()).dominators == VertexSet{0});
    const Graph p3 = gen::path(3);
    CHECK(protocol_domset(p3, LinearOrder::identity(3), 1, SimModel::congest_bc()).dominators == VertexSet{0, 1});
    const Graph p5 = gen::path(5);
    const auto res = protocol_domset(p5, LinearOrder::identity(5), 1, SimModel::congest_bc());
    CHECK(res.dominators == by_ids(p5, {1, 2, 3, 4}));
    CHECK(res.trace.total_rounds() == 3);
  }

  TEST_CASE("connected protocol examples") {
    const Graph one = gen::path(1);
    const auto single = protocol_connected_domset_congest(one, LinearOrder::identity(1), 1, SimModel::congest_bc());
    CHECK(single.connected == VertexSet{0});

    const Graph p3 = gen::path(3);
    const auto natural = LinearOrder::identity(3);
    CHECK(protocol_connected_domset_congest(p3, natural, 1, SimModel::congest_bc()).connected == VertexSet{0, 1});

    const Graph c6 = gen::cycle(6);
    const auto cc = protocol_connected_domset_congest(c6, degeneracy_order(c6), 1, SimModel::congest_bc());
    CHECK(induces_connected(c6, cc.connected));
    CHECK(is_distance_dominating(c6, cc.connected, 1));
    CHECK(cc.trace.total_rounds() == 7);

    const Graph star = gen::star(5);
    const auto s = protocol_connected_domset_local(star, VertexSet{0}, 1);
    CHECK(s.connected == VertexSet{0});
    CHECK(s.trace.total_rounds() == 4);

    const Graph p5 = gen::path(5);
    const auto m = protocol_connected_domset_local(p5, by_ids(p5, {2, 4}), 1);
    CHECK(m.connected == by_ids(p5, {2, 3, 4}));
    CHECK(m.trace.total_rounds() == 4);
    CHECK_FALSE(m.aborted());

    const Graph grid = gen::grid(4, 4);
    const auto d = domset(grid, degeneracy_order(grid), 1).dominators;
    CHECK(protocol_connected_domset_local(grid, d, 1).connected == connect_via_minor(grid, d, 1).connected);
  }

  TEST_CASE("undominated input aborts the LOCAL construction") {
    const Graph p5 = gen::path(5);
    const auto res = protocol_connected_domset_local(p5, by_ids(p5, {1}), 1);
    CHECK(res.aborted());
    CHECK(res.undominated == by_ids(p5, {3, 4, 5}));
    CHECK(res.trace.total_rounds() == 4);
    CHECK(res.connected.empty());
  }

  TEST_CASE("distributed equals sequential on the corpus") {
    std::mt19937_64 rng(71);
    for (const auto& [name, g] : test::corpus()) {
      CAPTURE(name);
      for (int r = 1; r <= 3; ++r) {
        CAPTURE(r);
        for (const auto& [label, order] : orders_for(g, 2 * r, rng)) {
          CAPTURE(label);
          const auto table = wreach(g, order, 2 * r);
          const std::size_t c = wcol_value(table);
          const auto wd = protocol_wreach_dist(g, order, 2 * r, bounded_model(c, r));
          CHECK(wd.table == table);
          CHECK(wd.trace.total_rounds() == static_cast<std::size_t>(2 * r));
          CHECK(wd.max_set_size == c);
          CHECK(wd.trace.max_bits() <= congestion_bound(16, c, r, g.size()));

          const auto seq = domset(g, order, r);
          const auto dd = protocol_domset(g, order, r, bounded_model(c, r));
          CHECK(dd.dominators == seq.dominators);
          CHECK(dd.dominator_of == seq.dominated_by);
          CHECK(dd.trace.total_rounds() == static_cast<std::size_t>(3 * r));
          CHECK(dd.trace.rounds_in_phase("wreach") == static_cast<std::size_t>(2 * r));
          CHECK(dd.trace.rounds_in_phase("elect") == static_cast<std::size_t>(r));

          const auto big = wreach(g, order, 2 * r + 1);
          const std::size_t c1 = wcol_value(big);
          const auto cd = protocol_connected_domset_congest(g, order, r, bounded_model(c1, r));
          CHECK(cd.dominators == seq.dominators);
          CHECK(cd.connected == connect_via_wreach(g, order, seq.dominators, r, big).connected);
          CHECK(cd.trace.total_rounds() == static_cast<std::size_t>(5 * r + 2));
          CHECK(cd.trace.max_bits() <= congestion_bound(16, c1, r, g.size()));

          const auto ld = protocol_connected_domset_local(g, seq.dominators, r);
          CHECK_FALSE(ld.aborted());
          CHECK(ld.connected == connect_via_minor(g, seq.dominators, r).connected);
          CHECK(ld.trace.total_rounds() == static_cast<std::size_t>(3 * r + 1));
        }
        VertexSet all(g.size());
        std::iota(all.begin(), all.end(), 0);
        CHECK(protocol_connected_domset_local(g, all, r).connected == connect_via_minor(g, all, r).connected);
      }
    }
  }

  TEST_CASE("serial and parallel runs agree") {
    const Graph g = gen::partial_ktree(80, 2, 0.8, 13);
    const auto order = heuristic_wcol_order(g, 4);
    RunOptions serial;
    serial.exec = Exec::serial;
    std::mt19937_64 rng(73);
    serial.step_order.resize(g.size());
    std::iota(serial.step_order.begin(), serial.step_order.end(), 0);
    std::shuffle(serial.step_order.begin(), serial.step_order.end(), rng);
    const auto a = protocol_connected_domset_congest(g, order, 2, SimModel::congest_bc(1e6));
    const auto b = protocol_connected_domset_congest(g, order, 2, SimModel::congest_bc(1e6), serial);
    CHECK(a.connected == b.connected);
    CHECK(a.trace == b.trace);
    const auto la = protocol_connected_domset_local(g, a.dominators, 2);
    const auto lb = protocol_connected_domset_local(g, a.dominators, 2, SimModel::local(), serial);
    CHECK(la.connected == lb.connected);
    CHECK(la.trace == lb.trace);
  }

  TEST_CASE("tiny caps are reported, not widened") {
    const Graph g = gen::grid(4, 4);
    CHECK_THROWS_AS(protocol_wreach_dist(g, degeneracy_order(g), 4, SimModel::congest_bc(1)), BandwidthViolation);
  }

  TEST_CASE("order phase") {
    const Graph g = gen::grid(5, 5);
    const auto injected = inject_order(g, degeneracy_order(g), 2);
    CHECK(injected.rounds == 4 * 5);
    CHECK(injected.source == OrderSource::injected);
    CHECK(inject_order(g, degeneracy_order(g), 2, ProtocolConfig{16, 7}).rounds == 7);
    CHECK_THROWS_AS(inject_order(g, LinearOrder::identity(3), 1), InvalidArgument);

    for (const auto& [name, h] : test::corpus()) {
      CAPTURE(name);
      const auto phase = simulate_order_phase(h, SimModel::congest_bc());
      CHECK(phase.source == OrderSource::simulated);
      CHECK(phase.order.size() == h.size());
      CHECK(phase.rounds == phase.trace.total_rounds());
      CHECK(phase.rounds <= std::max<std::size_t>(h.size(), 1));
      CHECK(phase.trace.rounds_in_phase("order") == phase.rounds);
      const auto seq = domset(h, phase.order, 1);
      CHECK(protocol_domset(h, phase.order, 1, SimModel::congest_bc()).dominators == seq.dominators);
    }
  }
}
