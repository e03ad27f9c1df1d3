#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "croute/multigraph.hpp"

namespace croute {

// ---------------------------------------------------------------------------
// Dinic max-flow on an explicit arc list. Arc i and i^1 are a residual pair.
// ---------------------------------------------------------------------------
class FlowNetwork {
 public:
  int add_node() { return node_count_++; }

  int add_arc(int from, int to, long long cap) {
    head_.push_back(to);
    cap_.push_back(cap);
    next_of_[from].push_back(static_cast<int>(head_.size()) - 1);
    head_.push_back(from);
    cap_.push_back(0);
    next_of_[to].push_back(static_cast<int>(head_.size()) - 1);
    return static_cast<int>(head_.size()) - 2;
  }

  long long max_flow(int s, int t, long long limit) {
    long long total = 0;
    while (total < limit && bfs(s, t)) {
      iter_.assign(node_count_, 0);
      long long f;
      while (total < limit && (f = dfs(s, t, limit - total)) > 0) total += f;
    }
    last_source_ = s;
    return total;
  }

  long long flow_on(int arc) const { return cap_[arc ^ 1]; }
  long long residual(int arc) const { return cap_[arc]; }
  int arc_head(int arc) const { return head_[arc]; }
  int arc_tail(int arc) const { return head_[arc ^ 1]; }
  int node_count() const { return node_count_; }

  // Nodes reachable from the last max_flow's source in the residual graph.
  std::vector<char> residual_reachable() const {
    std::vector<char> seen(node_count_, 0);
    std::vector<int> stack{last_source_};
    seen[last_source_] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      auto it = next_of_.find(v);
      if (it == next_of_.end()) continue;
      for (int a : it->second)
        if (cap_[a] > 0 && !seen[head_[a]]) {
          seen[head_[a]] = 1;
          stack.push_back(head_[a]);
        }
    }
    return seen;
  }

  // Cancel circulation on antiparallel pairs so decomposition sees net flow.
  void cancel_pair(int arc_a, int arc_b) {
    long long m = std::min(flow_on(arc_a), flow_on(arc_b));
    if (m <= 0) return;
    cap_[arc_a] += m;
    cap_[arc_a ^ 1] -= m;
    cap_[arc_b] += m;
    cap_[arc_b ^ 1] -= m;
  }

  void consume_unit(int arc) {
    check(cap_[arc ^ 1] > 0, "consume_unit: no flow on arc");
    cap_[arc ^ 1] -= 1;
    cap_[arc] += 1;
  }

  const std::vector<int>& arcs_from(int v) {
    return next_of_[v];
  }

 private:
  bool bfs(int s, int t) {
    level_.assign(node_count_, -1);
    std::queue<int> q;
    q.push(s);
    level_[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      auto it = next_of_.find(v);
      if (it == next_of_.end()) continue;
      for (int a : it->second)
        if (cap_[a] > 0 && level_[head_[a]] < 0) {
          level_[head_[a]] = level_[v] + 1;
          q.push(head_[a]);
        }
    }
    return level_[t] >= 0;
  }

  long long dfs(int v, int t, long long f) {
    if (v == t) return f;
    auto& arcs = next_of_[v];
    for (int& i = iter_[v]; i < static_cast<int>(arcs.size()); ++i) {
      int a = arcs[i];
      if (cap_[a] <= 0 || level_[head_[a]] != level_[v] + 1) continue;
      long long d = dfs(head_[a], t, std::min(f, cap_[a]));
      if (d > 0) {
        cap_[a] -= d;
        cap_[a ^ 1] += d;
        return d;
      }
    }
    return 0;
  }

  int node_count_ = 0;
  std::vector<int> head_;
  std::vector<long long> cap_;
  std::map<int, std::vector<int>> next_of_;
  std::vector<int> level_, iter_;
  int last_source_ = 0;
};

// ---------------------------------------------------------------------------
// Flow problems over a MultiGraph. Sources/sinks may be vertex sets or edge
// sets; designated terminal edges are subdivided inside the network only
// (the public graph is untouched). A returned path that starts or ends at a
// terminal edge contains that edge as its first/last edge.
// ---------------------------------------------------------------------------
struct TerminalSpec {
  VertexSet verts;
  EdgeSet edges;
  int mult = 1;  // per-terminal supply/demand; 0 = unbounded

  bool is_edges() const { return !edges.empty(); }
  std::size_t size() const { return is_edges() ? edges.size() : verts.size(); }

  static TerminalSpec vertex_set(VertexSet v, int mult = 1) {
    TerminalSpec t;
    t.verts = std::move(v);
    t.mult = mult;
    return t;
  }
  static TerminalSpec edge_set(EdgeSet e, int mult = 1) {
    TerminalSpec t;
    t.edges = std::move(e);
    t.mult = mult;
    return t;
  }
};

struct FlowProblem {
  const MultiGraph* g = nullptr;
  TerminalSpec sources, sinks;
  int edge_capacity = 1;  // η
};

struct FlowResult {
  long long value = 0;
  bool feasible = false;
  PathSet paths;
  VertexSet cut;        // source-side host vertices when infeasible
  EdgeSet cut_edges;    // host edges crossing the cut
  long long cut_capacity = 0;
};

namespace detail {

struct BuiltNetwork {
  FlowNetwork net;
  int s_star = -1, t_star = -1;
  std::map<Vertex, int> node_of;
  std::map<int, Vertex> host_of_node;        // plain vertex nodes
  std::map<int, EdgeId> subdivision_edge;    // x_e node -> host edge
  // arc -> host edge traversed (for plain host arcs and half arcs)
  std::map<int, EdgeId> arc_edge;
  std::vector<std::pair<int, int>> host_arc_pairs;  // antiparallel arc pairs
};

inline BuiltNetwork build_network(const FlowProblem& p) {
  const MultiGraph& g = *p.g;
  require(p.edge_capacity >= 1, Err::MalformedInput, "edge capacity must be >= 1");
  for (Vertex v : p.sources.verts)
    require(g.has_vertex(v), Err::MalformedInput, "unknown source vertex");
  for (Vertex v : p.sinks.verts)
    require(g.has_vertex(v), Err::MalformedInput, "unknown sink vertex");
  for (EdgeId e : p.sources.edges)
    require(g.has_edge(e), Err::MalformedInput, "unknown source edge");
  for (EdgeId e : p.sinks.edges) {
    require(g.has_edge(e), Err::MalformedInput, "unknown sink edge");
    require(!p.sources.edges.count(e), Err::MalformedInput,
            "source/sink edge sets must be disjoint");
  }

  BuiltNetwork b;
  const long long eta = p.edge_capacity;
  for (Vertex v : g.vertices()) {
    int n = b.net.add_node();
    b.node_of[v] = n;
    b.host_of_node[n] = v;
  }
  b.s_star = b.net.add_node();
  b.t_star = b.net.add_node();

  EdgeSet special = p.sources.edges;
  special.insert(p.sinks.edges.begin(), p.sinks.edges.end());

  std::map<EdgeId, int> sub_node;
  for (const auto& [e, ee] : g.edge_map()) {
    int nu = b.node_of[ee.u], nv = b.node_of[ee.v];
    if (!special.count(e)) {
      int a = b.net.add_arc(nu, nv, eta);
      int r = b.net.add_arc(nv, nu, eta);
      b.arc_edge[a] = e;
      b.arc_edge[r] = e;
      b.host_arc_pairs.emplace_back(a, r);
    } else {
      int x = b.net.add_node();
      sub_node[e] = x;
      b.subdivision_edge[x] = e;
      for (int n : {nu, nv}) {
        int a = b.net.add_arc(n, x, eta);
        int r = b.net.add_arc(x, n, eta);
        b.arc_edge[a] = e;
        b.arc_edge[r] = e;
        b.host_arc_pairs.emplace_back(a, r);
      }
    }
  }

  const long long big = std::numeric_limits<long long>::max() / 4;
  auto hook = [&](const TerminalSpec& spec, bool is_source) {
    long long m = spec.mult == 0 ? big : spec.mult;
    if (spec.is_edges()) {
      for (EdgeId e : spec.edges) {
        int x = sub_node.at(e);
        if (is_source)
          b.net.add_arc(b.s_star, x, m);
        else
          b.net.add_arc(x, b.t_star, m);
      }
    } else {
      for (Vertex v : spec.verts) {
        if (is_source)
          b.net.add_arc(b.s_star, b.node_of[v], m);
        else
          b.net.add_arc(b.node_of[v], b.t_star, m);
      }
    }
  };
  hook(p.sources, true);
  hook(p.sinks, false);
  return b;
}

// Peel integral paths out of the (cancelled) flow. Walks follow positive
// flow arcs in insertion order; loops are spliced out of the node walk.
inline PathSet decompose_paths(BuiltNetwork& b, const MultiGraph& g,
                               long long value) {
  PathSet out;
  for (auto [a, r] : b.host_arc_pairs) b.net.cancel_pair(a, r);

  for (long long iter = 0; iter < value; ++iter) {
    std::vector<int> walk_nodes{b.s_star};
    std::vector<int> walk_arcs;
    int cur = b.s_star;
    std::map<int, std::size_t> pos{{b.s_star, 0}};
    while (cur != b.t_star) {
      // only forward arcs (even index) carry flow; odd indices are residuals
      int chosen = -1;
      for (int a : b.net.arcs_from(cur))
        if ((a & 1) == 0 && b.net.flow_on(a) > 0) {
          chosen = a;
          break;
        }
      check(chosen >= 0, "path decomposition: flow conservation violated");
      b.net.consume_unit(chosen);
      cur = b.net.arc_head(chosen);
      auto it = pos.find(cur);
      if (it != pos.end()) {
        // splice out the loop (its flow stays consumed as a circulation)
        std::size_t back_to = it->second;
        for (std::size_t i = back_to + 1; i < walk_nodes.size(); ++i)
          pos.erase(walk_nodes[i]);
        walk_nodes.resize(back_to + 1);
        walk_arcs.resize(back_to);
        continue;
      }
      walk_nodes.push_back(cur);
      walk_arcs.push_back(chosen);
      pos[cur] = walk_nodes.size() - 1;
    }

    // Convert the node walk (s*, n1, ..., nk, t*) into a host path. Host
    // edges are recovered from arc metadata; each subdivision traversal
    // contributes its edge twice in a row (the two halves), merged here.
    // A walk starting (or ending) at a subdivision node x_e starts (ends)
    // at edge e: the edge appears once and the far endpoint is implied.
    std::vector<EdgeId> eseq;
    for (std::size_t i = 0; i < walk_arcs.size(); ++i) {
      auto em = b.arc_edge.find(walk_arcs[i]);
      if (em == b.arc_edge.end()) continue;  // source/sink hookup arc
      if (!eseq.empty() && eseq.back() == em->second &&
          b.subdivision_edge.count(walk_nodes[i]))
        continue;  // second half of a subdivision traversal
      eseq.push_back(em->second);
    }
    check(!eseq.empty(), "path decomposition: empty path");
    Vertex start;
    {
      int n1 = walk_nodes[1];
      auto sub = b.subdivision_edge.find(n1);
      if (sub == b.subdivision_edge.end()) {
        start = b.host_of_node.at(n1);
      } else {
        // first edge is e; the walk continues to a host node, so the path
        // starts at e's other endpoint
        check(walk_nodes.size() > 3, "degenerate source-edge walk");
        Vertex to = b.host_of_node.at(walk_nodes[2]);
        start = g.other_end(sub->second, to);
      }
    }
    Path q;
    q.verts.push_back(start);
    Vertex at = start;
    for (EdgeId e : eseq) {
      at = g.other_end(e, at);
      q.verts.push_back(at);
    }
    q.edges = std::move(eseq);
    out.push_back(simplify_walk(std::move(q)));
  }
  return out;
}

}  // namespace detail

inline FlowResult max_flow_integral(const FlowProblem& p, long long demand) {
  require(demand >= 0, Err::MalformedInput, "demand must be non-negative");
  const MultiGraph& g = *p.g;
  detail::BuiltNetwork b = detail::build_network(p);
  const long long big = std::numeric_limits<long long>::max() / 8;
  FlowResult res;
  res.value = b.net.max_flow(b.s_star, b.t_star, demand == 0 ? big : demand);
  res.feasible = demand > 0 && res.value >= demand;
  if (demand == 0) res.feasible = true;

  if (res.feasible && res.value > 0) {
    res.paths = detail::decompose_paths(b, g, res.value);
    auto loads = edge_loads(res.paths);
    for (const auto& [e, c] : loads)
      check(c <= p.edge_capacity, "materialized congestion exceeds eta");
    for (const Path& path : res.paths) check_path(g, path);
  } else if (!res.feasible) {
    std::vector<char> reach = b.net.residual_reachable();
    for (const auto& [v, n] : b.node_of)
      if (reach[n]) res.cut.insert(v);
    // terminals on the sink side by construction of the certificate
    for (Vertex t : p.sinks.verts) res.cut.erase(t);
    res.cut_edges = g.out_edges(res.cut);
    res.cut_capacity = res.value;
  }
  return res;
}

// ---------------------------------------------------------------------------
// route_matching: integral multicommodity routing of a partial matching with
// per-edge budget eta. Infeasibility certificates come from the aggregated
// single-commodity relaxation (sound); when the aggregate is feasible the
// per-pair search uses deterministic rip-up-and-reroute attempts.
// ---------------------------------------------------------------------------
struct MatchRouteResult {
  bool routed = false;
  PathSet paths;
  bool has_cut = false;
  VertexSet cut;
  EdgeSet cut_edges;
  long long cut_capacity = 0;
  bool search_exhausted = false;
};

namespace detail {

// Unit augmentation: BFS over edges with remaining capacity.
inline bool unit_route(const MultiGraph& g, std::map<EdgeId, int>& cap, Vertex s,
                       Vertex t, Path* out) {
  std::map<Vertex, std::pair<Vertex, EdgeId>> parent;
  std::vector<Vertex> frontier{s};
  parent[s] = {s, -1};
  bool found = s == t;
  while (!frontier.empty() && !found) {
    std::vector<Vertex> nxt;
    for (Vertex v : frontier) {
      std::vector<EdgeId> inc = g.incident(v);
      std::sort(inc.begin(), inc.end());
      for (EdgeId e : inc) {
        if (cap[e] <= 0) continue;
        Vertex w = g.other_end(e, v);
        if (parent.count(w)) continue;
        parent[w] = {v, e};
        if (w == t) {
          found = true;
          break;
        }
        nxt.push_back(w);
      }
      if (found) break;
    }
    frontier = std::move(nxt);
  }
  if (!found) return false;
  Path p;
  Vertex cur = t;
  while (cur != s) {
    auto [pv, pe] = parent[cur];
    p.verts.push_back(cur);
    p.edges.push_back(pe);
    cur = pv;
  }
  p.verts.push_back(s);
  std::reverse(p.verts.begin(), p.verts.end());
  std::reverse(p.edges.begin(), p.edges.end());
  for (EdgeId e : p.edges) --cap[e];
  if (out) *out = p;
  return true;
}

}  // namespace detail

inline MatchRouteResult route_matching(const MultiGraph& g,
                                       const std::vector<std::pair<Vertex, Vertex>>& pairs,
                                       int eta, Rng& rng, int attempts = 24) {
  {
    VertexSet seen;
    for (auto [a, bb] : pairs) {
      require(g.has_vertex(a) && g.has_vertex(bb), Err::MalformedInput,
              "route_matching: unknown vertex");
      require(seen.insert(a).second && seen.insert(bb).second, Err::MalformedInput,
              "route_matching: repeated vertex in matching");
    }
  }
  MatchRouteResult res;
  if (pairs.empty()) {
    res.routed = true;
    return res;
  }

  // Aggregated relaxation: necessary condition, and its failure certifies
  // infeasibility of the demand set.
  VertexSet srcs, snks;
  for (auto [a, b] : pairs) {
    srcs.insert(a);
    snks.insert(b);
  }
  FlowProblem agg{&g, TerminalSpec::vertex_set(srcs, 1),
                  TerminalSpec::vertex_set(snks, 1), eta};
  FlowResult aggres = max_flow_integral(agg, static_cast<long long>(pairs.size()));
  if (!aggres.feasible) {
    res.has_cut = true;
    res.cut = aggres.cut;
    res.cut_edges = aggres.cut_edges;
    res.cut_capacity = aggres.cut_capacity;
    return res;
  }

  std::vector<std::size_t> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::map<EdgeId, int> cap;
    for (EdgeId e : g.edge_ids()) cap[e] = eta;
    PathSet paths(pairs.size());
    bool ok = true;
    for (std::size_t idx : order) {
      if (!detail::unit_route(g, cap, pairs[idx].first, pairs[idx].second,
                              &paths[idx])) {
        ok = false;
        break;
      }
    }
    if (ok) {
      res.routed = true;
      res.paths = std::move(paths);
      check(congestion(res.paths) <= eta, "route_matching: budget exceeded");
      return res;
    }
    if (attempt + 1 < static_cast<int>(pairs.size()))
      std::rotate(order.begin(), order.begin() + 1, order.end());
    else
      rng.shuffle(order);
  }
  res.search_exhausted = true;
  return res;
}

// Demands whose endpoints are edges (1-restricted demand sets on out(C)).
// Each routed path contains its two demand edges as first and last edge.
inline MatchRouteResult route_demand_edges(
    const MultiGraph& g, const std::vector<std::pair<EdgeId, EdgeId>>& demands,
    int eta, Rng& rng, int attempts = 24) {
  {
    EdgeSet seen;
    for (auto [a, b] : demands) {
      require(g.has_edge(a) && g.has_edge(b), Err::MalformedInput,
              "route_demand_edges: unknown edge");
      require(a != b, Err::MalformedInput, "route_demand_edges: demand on one edge");
      require(seen.insert(a).second && seen.insert(b).second, Err::MalformedInput,
              "route_demand_edges: demands are not 1-restricted");
    }
  }
  MatchRouteResult res;
  if (demands.empty()) {
    res.routed = true;
    return res;
  }

  EdgeSet srcs, snks;
  for (auto [a, b] : demands) {
    srcs.insert(a);
    snks.insert(b);
  }
  FlowProblem agg{&g, TerminalSpec::edge_set(srcs, 1), TerminalSpec::edge_set(snks, 1),
                  eta};
  FlowResult aggres = max_flow_integral(agg, static_cast<long long>(demands.size()));
  if (!aggres.feasible) {
    res.has_cut = true;
    res.cut = aggres.cut;
    res.cut_edges = aggres.cut_edges;
    res.cut_capacity = aggres.cut_capacity;
    return res;
  }

  std::vector<std::size_t> order(demands.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::map<EdgeId, int> cap;
    for (EdgeId e : g.edge_ids()) cap[e] = eta;
    PathSet paths(demands.size());
    bool ok = true;
    for (std::size_t idx : order) {
      auto [ea, eb] = demands[idx];
      if (cap[ea] <= 0 || cap[eb] <= 0) {
        ok = false;
        break;
      }
      --cap[ea];
      --cap[eb];
      EdgeEnds aa = g.ends(ea), bb = g.ends(eb);
      bool found = false;
      Path inner;
      // try entry/exit endpoint combinations deterministically
      for (Vertex from : {aa.u, aa.v}) {
        for (Vertex to : {bb.u, bb.v}) {
          std::map<EdgeId, int> trial = cap;
          Path q;
          if (detail::unit_route(g, trial, from, to, &q)) {
            cap = std::move(trial);
            inner = q;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) {
        ok = false;
        break;
      }
      Path full;
      full.verts.push_back(g.other_end(ea, inner.front()));
      full.verts.insert(full.verts.end(), inner.verts.begin(), inner.verts.end());
      full.edges.push_back(ea);
      full.edges.insert(full.edges.end(), inner.edges.begin(), inner.edges.end());
      full.verts.push_back(g.other_end(eb, inner.back()));
      full.edges.push_back(eb);
      paths[idx] = full;
    }
    if (ok) {
      for (auto& pp : paths) check_path(g, pp);
      if (congestion(paths) <= eta) {
        res.routed = true;
        res.paths = std::move(paths);
        return res;
      }
    }
    if (attempt + 1 < static_cast<int>(demands.size()))
      std::rotate(order.begin(), order.begin() + 1, order.end());
    else
      rng.shuffle(order);
  }
  res.search_exhausted = true;
  return res;
}

// ---------------------------------------------------------------------------
// Multiplicative-weights LP solvers (Garg–Könemann / Fleischer style).
// ---------------------------------------------------------------------------
struct LpResult {
  double total = 0.0;          // Σ x_i
  std::vector<double> x;       // per-pair routed amount, in [0, 1]
  double max_edge_load = 0.0;  // of the scaled fractional flow
};

namespace detail {

struct WeightedDijkstra {
  const MultiGraph* g;
  const std::map<EdgeId, double>* w;

  // returns (dist, path) or nullopt when unreachable
  std::optional<std::pair<double, Path>> run(Vertex s, Vertex t) const {
    std::map<Vertex, double> dist;
    std::map<Vertex, std::pair<Vertex, EdgeId>> parent;
    using Item = std::pair<double, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[s] = 0.0;
    pq.push({0.0, s});
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d > dist[v] + 1e-15) continue;
      if (v == t) break;
      std::vector<EdgeId> inc = g->incident(v);
      std::sort(inc.begin(), inc.end());
      for (EdgeId e : inc) {
        double nd = d + w->at(e);
        Vertex u = g->other_end(e, v);
        auto it = dist.find(u);
        if (it == dist.end() || nd < it->second - 1e-15) {
          dist[u] = nd;
          parent[u] = {v, e};
          pq.push({nd, u});
        }
      }
    }
    auto it = dist.find(t);
    if (it == dist.end()) return std::nullopt;
    Path p;
    Vertex cur = t;
    while (cur != s) {
      auto [pv, pe] = parent[cur];
      p.verts.push_back(cur);
      p.edges.push_back(pe);
      cur = pv;
    }
    p.verts.push_back(s);
    std::reverse(p.verts.begin(), p.verts.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return std::make_pair(it->second, p);
  }
};

}  // namespace detail

// EDP LP relaxation: max Σ x_i subject to unit edge capacities and x_i <= 1.
// Garg–Könemann with one virtual unit-capacity edge per pair for the x_i cap.
inline LpResult edp_lp_value(const MultiGraph& g,
                             const std::vector<std::pair<Vertex, Vertex>>& pairs,
                             double eps) {
  require(eps > 0 && eps < 1, Err::MalformedInput, "eps must be in (0,1)");
  LpResult res;
  res.x.assign(pairs.size(), 0.0);
  if (pairs.empty()) return res;

  const double ehat = eps / 3.0;
  const double M = static_cast<double>(g.edge_count() + pairs.size());
  const double delta = (1.0 + ehat) * std::pow((1.0 + ehat) * M, -1.0 / ehat);
  std::map<EdgeId, double> w;
  for (EdgeId e : g.edge_ids()) w[e] = delta;
  std::vector<double> wv(pairs.size(), delta);
  std::map<EdgeId, double> load;
  std::vector<double> xhat(pairs.size(), 0.0);
  std::vector<char> dead(pairs.size(), 0);

  detail::WeightedDijkstra dj{&g, &w};
  // Fleischer-style sweep: path lengths only grow, so a pair whose best
  // length reaches 1 is dropped for good.
  double alpha = delta;
  while (alpha < 1.0) {
    double next_alpha = std::numeric_limits<double>::infinity();
    bool routed_any = false;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (dead[i]) continue;
      for (;;) {
        auto sp = dj.run(pairs[i].first, pairs[i].second);
        if (!sp) {
          dead[i] = 1;
          break;
        }
        double len = sp->first + wv[i];
        if (len >= 1.0) {
          dead[i] = 1;
          break;
        }
        if (len > alpha * (1.0 + ehat)) {
          next_alpha = std::min(next_alpha, len);
          break;
        }
        // route one unit
        for (EdgeId e : sp->second.edges) {
          w[e] *= (1.0 + ehat);
          load[e] += 1.0;
        }
        wv[i] *= (1.0 + ehat);
        xhat[i] += 1.0;
        routed_any = true;
      }
    }
    bool all_dead = true;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (!dead[i]) all_dead = false;
    if (all_dead) break;
    if (!routed_any && next_alpha == std::numeric_limits<double>::infinity())
      break;
    alpha = std::max(alpha * (1.0 + ehat),
                     next_alpha == std::numeric_limits<double>::infinity()
                         ? alpha * (1.0 + ehat)
                         : next_alpha);
  }

  const double scale = std::log((1.0 + ehat) / delta) / std::log(1.0 + ehat);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    res.x[i] = std::min(1.0, xhat[i] / scale);
    res.total += res.x[i];
  }
  for (const auto& [e, l] : load)
    res.max_edge_load = std::max(res.max_edge_load, l / scale);
  return res;
}

// Maximum concurrent flow: largest λ so every pair routes λ·demand_i
// simultaneously within unit capacities. Fleischer's phase algorithm.
struct ConcurrentResult {
  double lambda = 0.0;
  double max_edge_load = 0.0;
};

inline ConcurrentResult concurrent_flow(
    const MultiGraph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs,
    const std::vector<double>& demands, double eps) {
  require(eps > 0 && eps < 1, Err::MalformedInput, "eps must be in (0,1)");
  require(demands.size() == pairs.size(), Err::MalformedInput,
          "demand list size mismatch");
  ConcurrentResult res;
  if (pairs.empty()) return res;

  const double ehat = eps / 3.0;
  const double m = static_cast<double>(g.edge_count());
  const double delta = std::pow(m / (1.0 - ehat), -1.0 / ehat);
  std::map<EdgeId, double> w;
  for (EdgeId e : g.edge_ids()) w[e] = delta;
  std::map<EdgeId, double> load;

  detail::WeightedDijkstra dj{&g, &w};
  auto total_weight = [&]() {
    double s = 0;
    for (const auto& [e, x] : w) s += x;
    return s;
  };

  long long phases = 0;
  // λ* ≤ m / d_min, so this cap is never the binding stop condition; it only
  // guards against a stalled weight function.
  double d_min = demands[0];
  for (double d : demands)
    if (d > 1e-12) d_min = std::min(d_min, d);
  const double scale_est =
      std::log((1.0 + ehat) / delta) / std::log(1.0 + ehat);
  const long long max_phases = 16 + static_cast<long long>(
      std::ceil((m / std::max(d_min, 1e-9) + 2.0) * scale_est));
  while (total_weight() < 1.0 && phases < max_phases) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      double rem = demands[i];
      while (rem > 1e-12 && total_weight() < 1.0) {
        auto sp = dj.run(pairs[i].first, pairs[i].second);
        if (!sp) return ConcurrentResult{};  // disconnected pair: λ = 0
        double c = std::min(rem, 1.0);  // unit capacities
        for (EdgeId e : sp->second.edges) {
          w[e] *= (1.0 + ehat * c);
          load[e] += c;
        }
        rem -= c;
      }
      if (rem > 1e-12) {
        // phase interrupted; do not count it
        goto done;
      }
    }
    ++phases;
  }
done:
  const double scale = std::log(1.0 / delta) / std::log(1.0 + ehat);
  res.lambda = static_cast<double>(phases) / scale;
  for (const auto& [e, l] : load)
    res.max_edge_load = std::max(res.max_edge_load, l / scale);
  return res;
}

}  // namespace croute
