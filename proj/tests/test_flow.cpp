#include <catch2/catch_amalgamated.hpp>

#include "croute/flow.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace croute;

TEST_CASE("max_flow_integral single-commodity basics") {
  SECTION("K4 s->t saturates three edge-disjoint paths") {
    MultiGraph g = fixtures::k4();
    // oracle: min cut enumeration says 3
    REQUIRE(oracles::min_cut_enum(g, 1, 4) == 3);
    FlowProblem p{&g, TerminalSpec::vertex_set({1}, 0),
                  TerminalSpec::vertex_set({4}, 0), 1};
    FlowResult r = max_flow_integral(p, 0);
    REQUIRE(r.value == 3);
    REQUIRE(congestion_checked(g, r.paths) <= 1);
  }
  SECTION("disconnected source-sink returns the component as cut") {
    MultiGraph g = fixtures::from_edges(4, {{1, 2}, {3, 4}});
    FlowProblem p{&g, TerminalSpec::vertex_set({1}, 0),
                  TerminalSpec::vertex_set({3}, 0), 1};
    FlowResult r = max_flow_integral(p, 1);
    REQUIRE_FALSE(r.feasible);
    REQUIRE(r.value == 0);
    REQUIRE(r.cut == VertexSet{1, 2});
    REQUIRE(r.cut_edges.empty());
  }
  SECTION("single edge, unit demand, one path") {
    MultiGraph g = fixtures::path_graph(2);
    FlowProblem p{&g, TerminalSpec::vertex_set({1}),
                  TerminalSpec::vertex_set({2}), 1};
    FlowResult r = max_flow_integral(p, 1);
    REQUIRE(r.feasible);
    REQUIRE(r.paths.size() == 1);
    REQUIRE(r.paths[0].verts == std::vector<Vertex>{1, 2});
  }
}

TEST_CASE("max-flow value matches the cut-enumeration oracle on small graphs") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    MultiGraph g = fixtures::random_regular(8, 3, rng);
    std::vector<Vertex> vs = g.vertices();
    Vertex s = vs[rng.below(vs.size())], t;
    do {
      t = vs[rng.below(vs.size())];
    } while (t == s);
    FlowProblem p{&g, TerminalSpec::vertex_set({s}, 0),
                  TerminalSpec::vertex_set({t}, 0), 1};
    FlowResult r = max_flow_integral(p, 0);
    REQUIRE(r.value == oracles::min_cut_enum(g, s, t));
    REQUIRE(congestion_checked(g, r.paths) <= 1);
  }
}

TEST_CASE("edge-terminal flows materialize first/last edges") {
  // path 1-2-3-4-5; flow from edge (1,2) to edge (4,5)
  MultiGraph g = fixtures::path_graph(5);
  std::vector<EdgeId> es = g.edge_ids();
  FlowProblem p{&g, TerminalSpec::edge_set({es[0]}),
                TerminalSpec::edge_set({es[3]}), 1};
  FlowResult r = max_flow_integral(p, 1);
  REQUIRE(r.feasible);
  REQUIRE(r.paths.size() == 1);
  REQUIRE(r.paths[0].edges.front() == es[0]);
  REQUIRE(r.paths[0].edges.back() == es[3]);
  REQUIRE(r.paths[0].verts.front() == 1);
  REQUIRE(r.paths[0].verts.back() == 5);
}

TEST_CASE("flow-cut duality on certificates") {
  // demand above capacity: the certificate cut must be under demand
  MultiGraph g = fixtures::two_cliques_bridge(4);
  FlowProblem p{&g, TerminalSpec::vertex_set({1}, 0),
                TerminalSpec::vertex_set({8}, 0), 1};
  FlowResult r = max_flow_integral(p, 3);
  REQUIRE_FALSE(r.feasible);
  REQUIRE(r.cut_capacity < 3);
  REQUIRE(r.cut_edges.size() == 1);  // the bridge
}

TEST_CASE("route_matching") {
  Rng rng(5);
  SECTION("single pair over an edge") {
    MultiGraph g = fixtures::path_graph(2);
    auto r = route_matching(g, {{1, 2}}, 1, rng);
    REQUIRE(r.routed);
    REQUIRE(r.paths.size() == 1);
    REQUIRE(r.paths[0].edges.size() == 1);
  }
  SECTION("two pairs over one bridge at eta=1 is certified infeasible") {
    // 1-2-3 and 4-5-6 joined by bridge 3-4; pairs (1,5),(2,6)
    MultiGraph g = fixtures::from_edges(
        6, {{1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}});
    auto r = route_matching(g, {{1, 5}, {2, 6}}, 1, rng);
    REQUIRE_FALSE(r.routed);
    REQUIRE(r.has_cut);
    REQUIRE(r.cut_capacity < 2);
  }
  SECTION("star routes two pairs through the center at eta=2") {
    MultiGraph g = fixtures::star(4);  // center 1, leaves 2..5
    auto r = route_matching(g, {{2, 3}, {4, 5}}, 2, rng);
    REQUIRE(r.routed);
    REQUIRE(congestion_checked(g, r.paths) <= 2);
  }
  SECTION("repeated vertex rejected") {
    MultiGraph g = fixtures::star(4);
    REQUIRE_THROWS_AS(route_matching(g, {{2, 3}, {3, 4}}, 2, rng), Error);
  }
}

TEST_CASE("route_demand_edges routes 1-restricted edge demands") {
  Rng rng(9);
  MultiGraph g = fixtures::grid(3, 3);
  EdgeSet boundary = g.out_edges({1, 2, 4, 5});
  std::vector<EdgeId> bs(boundary.begin(), boundary.end());
  REQUIRE(bs.size() >= 4);
  std::vector<std::pair<EdgeId, EdgeId>> demands{{bs[0], bs[2]}, {bs[1], bs[3]}};
  auto r = route_demand_edges(g, demands, 2, rng);
  REQUIRE(r.routed);
  for (std::size_t i = 0; i < demands.size(); ++i) {
    REQUIRE(r.paths[i].edges.front() == demands[i].first);
    REQUIRE(r.paths[i].edges.back() == demands[i].second);
  }
  REQUIRE(congestion_checked(g, r.paths) <= 2);
}

TEST_CASE("edp LP matches the exact simplex oracle within eps") {
  const double eps = 0.05;
  SECTION("one pair, two disjoint paths: x_i <= 1 binds") {
    MultiGraph g = fixtures::cycle(4);
    std::vector<std::pair<Vertex, Vertex>> pairs{{1, 3}};
    REQUIRE(oracles::edp_lp_exact(g, pairs) == Rat(1));
    LpResult r = edp_lp_value(g, pairs, eps);
    REQUIRE(r.total >= 1.0 - eps);
    REQUIRE(r.total <= 1.0 + 1e-9);
  }
  SECTION("pairs across a bridge are capped by the cut") {
    MultiGraph g = fixtures::from_edges(
        6, {{1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}});
    std::vector<std::pair<Vertex, Vertex>> pairs{{1, 5}, {2, 6}};
    REQUIRE(oracles::edp_lp_exact(g, pairs) == Rat(1));
    LpResult r = edp_lp_value(g, pairs, eps);
    REQUIRE(r.total >= 1.0 - eps);
    REQUIRE(r.total <= 1.0 + 1e-9);
  }
  SECTION("4-cycle with two antipodal pairs routes both") {
    MultiGraph g = fixtures::cycle(4);
    std::vector<std::pair<Vertex, Vertex>> pairs{{1, 3}, {2, 4}};
    REQUIRE(oracles::edp_lp_exact(g, pairs) == Rat(2));
    LpResult r = edp_lp_value(g, pairs, eps);
    REQUIRE(r.total >= 2.0 * (1.0 - eps));
    REQUIRE(r.total <= 2.0 + 1e-9);
  }
  SECTION("random small instances agree with the oracle") {
    Rng rng(1234);
    for (int trial = 0; trial < 12; ++trial) {
      MultiGraph g = fixtures::random_regular(6, 3, rng);
      auto pairs = fixtures::random_pairs(g, 2, rng);
      Rat exact = oracles::edp_lp_exact(g, pairs);
      LpResult r = edp_lp_value(g, pairs, eps);
      double ex = rat_to_double(exact);
      REQUIRE(r.total >= ex * (1 - eps) - 1e-9);
      REQUIRE(r.total <= ex + 1e-9);
      REQUIRE(r.max_edge_load <= 1.0 + eps + 1e-9);
    }
  }
}

TEST_CASE("concurrent flow matches the exact oracle within eps") {
  const double eps = 0.05;
  Rng rng(77);
  for (int trial = 0; trial < 8; ++trial) {
    MultiGraph g = fixtures::random_regular(6, 3, rng);
    auto pairs = fixtures::random_pairs(g, 2, rng);
    std::vector<long long> demands{1, 1};
    Rat exact = oracles::concurrent_exact(g, pairs, demands);
    ConcurrentResult r = concurrent_flow(g, pairs, {1.0, 1.0}, eps);
    double ex = rat_to_double(exact);
    REQUIRE(r.lambda >= ex * (1 - eps) - 1e-9);
    REQUIRE(r.lambda <= ex + 1e-9);
  }
}
