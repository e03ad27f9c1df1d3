#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "croute/graph_io.hpp"
#include "croute/multigraph.hpp"
#include "support/fixtures.hpp"

using namespace croute;

TEST_CASE("out_edges basics") {
  MultiGraph g = fixtures::triangle();
  SECTION("single vertex of a triangle") {
    EdgeSet out = g.out_edges({1});
    REQUIRE(out.size() == 2);
  }
  SECTION("all vertices have empty boundary") {
    REQUIRE(g.out_edges({1, 2, 3}).empty());
  }
  SECTION("parallel edges are both reported") {
    MultiGraph h;
    h.add_vertex(1);
    h.add_vertex(2);
    EdgeId a = h.add_edge(1, 2);
    EdgeId b = h.add_edge(1, 2);
    EdgeSet out = h.out_edges({1});
    REQUIRE(out == EdgeSet{a, b});
  }
  SECTION("unknown vertex is malformed input") {
    REQUIRE_THROWS_AS(g.out_edges({99}), Error);
  }
}

TEST_CASE("contract_cluster") {
  SECTION("triangle edge contraction leaves two parallels") {
    MultiGraph g = fixtures::triangle();
    Contraction c = contract_cluster(g, {1, 2});
    REQUIRE(c.graph.vertex_count() == 2);
    REQUIRE(c.graph.edge_count() == 2);
    REQUIRE(c.graph.degree(c.super_node) == 2);
  }
  SECTION("singleton contraction only renames") {
    MultiGraph g = fixtures::triangle();
    Contraction c = contract_cluster(g, {2});
    REQUIRE(c.graph.vertex_count() == 3);
    REQUIRE(c.graph.edge_count() == 3);
  }
  SECTION("antipodal pair of a 4-cycle yields 4 parallels") {
    MultiGraph g = fixtures::cycle(4);  // 1-2-3-4-1
    Contraction c = contract_cluster(g, {1, 3});
    REQUIRE(c.graph.vertex_count() == 3);
    REQUIRE(c.graph.edge_count() == 4);
    REQUIRE(c.graph.degree(c.super_node) == 4);
  }
  SECTION("empty cluster rejected") {
    MultiGraph g = fixtures::triangle();
    REQUIRE_THROWS_AS(contract_cluster(g, {}), Error);
  }
  SECTION("boundary edge ids survive contraction") {
    MultiGraph g = fixtures::two_cliques_bridge(3);
    VertexSet left{1, 2, 3};
    EdgeSet before = g.out_edges(left);
    Contraction c = contract_cluster(g, left);
    EdgeSet after = c.graph.out_edges({c.super_node});
    REQUIRE(before == after);
  }
}

TEST_CASE("congestion") {
  MultiGraph g = fixtures::path_graph(4);
  std::vector<EdgeId> es = g.edge_ids();
  Path p1{{1, 2, 3}, {es[0], es[1]}};
  Path p2{{2, 3, 4}, {es[1], es[2]}};
  SECTION("edge-disjoint paths have congestion 1") {
    Path q{{3, 4}, {es[2]}};
    REQUIRE(congestion_checked(g, {p1, q}) == 1);
  }
  SECTION("one shared edge gives 2") {
    REQUIRE(congestion_checked(g, {p1, p2}) == 2);
  }
  SECTION("empty set gives 0") { REQUIRE(congestion(PathSet{}) == 0); }
  SECTION("non-incident consecutive edges are malformed") {
    Path bad{{1, 2, 4}, {es[0], es[2]}};
    REQUIRE_THROWS_AS(check_path(g, bad), Error);
  }
}

TEST_CASE("degree identity |out(S)| + 2|E(S)| = sum of degrees") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    MultiGraph g = fixtures::random_regular(12, 3, rng);
    VertexSet s;
    for (Vertex v : g.vertices())
      if (rng.below(2)) s.insert(v);
    if (s.empty()) continue;
    long long out = static_cast<long long>(g.out_edges(s).size());
    long long in = static_cast<long long>(g.internal_edges(s).size());
    REQUIRE(out + 2 * in == degree_sum(g, s));
  }
}

TEST_CASE("congestion is subadditive under union") {
  Rng rng(11);
  MultiGraph g = fixtures::grid(4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    auto random_path = [&]() {
      std::vector<Vertex> vs = g.vertices();
      Vertex s = vs[rng.below(vs.size())];
      Vertex t = vs[rng.below(vs.size())];
      Path p;
      if (!bfs_path(g, s, t, nullptr, &p)) p = Path{{s}, {}};
      return p;
    };
    PathSet a, b;
    for (int i = 0; i < 3; ++i) a.push_back(random_path());
    for (int i = 0; i < 4; ++i) b.push_back(random_path());
    PathSet u = a;
    u.insert(u.end(), b.begin(), b.end());
    REQUIRE(congestion(u) <= congestion(a) + congestion(b));
  }
}

TEST_CASE("multi contraction round trip") {
  MultiGraph g = fixtures::grid(3, 3);
  std::vector<VertexSet> clusters{{1, 2}, {7, 8, 9}};
  MultiContraction mc = contract_clusters(g, clusters);
  REQUIRE(mc.graph.vertex_count() == 9 - 5 + 2);
  // boundary identification is by edge identity
  for (const auto& [super, cluster] : mc.clusters) {
    REQUIRE(mc.graph.out_edges({super}) == g.out_edges(cluster));
    REQUIRE(mc.expand({super}) == cluster);
  }
  // no self loops survive
  for (EdgeId e : mc.graph.edge_ids()) {
    EdgeEnds ee = mc.graph.ends(e);
    REQUIRE(ee.u != ee.v);
  }
}

TEST_CASE("graph text round trip") {
  std::string text = "p 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 2\nd 1 4\n";
  ParsedInput in = parse_text(text);
  REQUIRE(in.g.vertex_count() == 4);
  REQUIRE(in.g.edge_count() == 4);
  REQUIRE(in.pairs.size() == 1);
  std::ostringstream os;
  write_graph(os, in.g, in.pairs);
  ParsedInput again = parse_text(os.str());
  REQUIRE(again.g.edge_count() == in.g.edge_count());
  REQUIRE(again.pairs == in.pairs);

  REQUIRE_THROWS_AS(parse_text("p 2 1\ne 1 3\n"), Error);
  REQUIRE_THROWS_AS(parse_text("e 1 2\n"), Error);
  REQUIRE_THROWS_AS(parse_text("p 2 1\nq 1 2\n"), Error);
}

TEST_CASE("simplify_walk shortcuts revisits") {
  MultiGraph g = fixtures::cycle(4);
  std::vector<EdgeId> es = g.edge_ids();  // 1-2,2-3,3-4,4-1
  Path walk{{1, 2, 3, 4, 1, 2}, {es[0], es[1], es[2], es[3], es[0]}};
  Path s = simplify_walk(walk);
  REQUIRE(s.front() == 1);
  REQUIRE(s.back() == 2);
  REQUIRE(s.edges.size() == 1);
}
