#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "croute/multigraph.hpp"

namespace croute {

// Spanning-tree grouping: partition weighted vertices into groups of weight
// in [p, 3p] with pairwise edge-disjoint spanning trees, one per group.
// Spanning tree = deterministic BFS from the minimum vertex id; "lowest
// vertex with w(T_v) > p" = maximum depth, ties by vertex id.
template <class W>
struct GroupingT {
  std::vector<std::vector<Vertex>> groups;
  std::vector<EdgeSet> trees;
  bool single_group_flagged = false;  // total weight < p
};

using Grouping = GroupingT<long long>;

namespace detail {

struct SpanTree {
  std::vector<Vertex> order;             // BFS order
  std::map<Vertex, Vertex> parent;
  std::map<Vertex, EdgeId> parent_edge;
  std::map<Vertex, int> depth;
  std::map<Vertex, std::vector<Vertex>> children;
};

inline SpanTree bfs_spanning_tree(const MultiGraph& g) {
  require(g.connected(), Err::Precondition, "grouping needs a connected graph");
  SpanTree t;
  Vertex root = *g.vertices().begin();
  t.order.push_back(root);
  t.parent[root] = root;
  t.depth[root] = 0;
  std::vector<Vertex> frontier{root};
  while (!frontier.empty()) {
    std::vector<Vertex> nxt;
    for (Vertex v : frontier) {
      std::vector<EdgeId> inc = g.incident(v);
      std::sort(inc.begin(), inc.end());
      for (EdgeId e : inc) {
        Vertex w = g.other_end(e, v);
        if (t.parent.count(w)) continue;
        t.parent[w] = v;
        t.parent_edge[w] = e;
        t.depth[w] = t.depth[v] + 1;
        t.children[v].push_back(w);
        t.order.push_back(w);
        nxt.push_back(w);
      }
    }
    frontier = std::move(nxt);
  }
  for (auto& [v, ch] : t.children) std::sort(ch.begin(), ch.end());
  return t;
}

}  // namespace detail

template <class W>
GroupingT<W> group_by_tree(const MultiGraph& g, const std::map<Vertex, W>& weights,
                           const W& p) {
  require(p > W(0), Err::Precondition, "grouping parameter must be positive");
  GroupingT<W> out;
  detail::SpanTree t = detail::bfs_spanning_tree(g);
  std::map<Vertex, W> w;
  W total = W(0);
  for (Vertex v : g.vertices()) {
    W wv = W(0);
    auto it = weights.find(v);
    if (it != weights.end()) wv = it->second;
    require(wv >= W(0) && wv <= p, Err::Precondition,
            "vertex weight outside [0, p]");
    w[v] = wv;
    total += wv;
  }

  std::map<Vertex, char> alive;
  for (Vertex v : g.vertices()) alive[v] = 1;

  auto subtree_weights = [&]() {
    std::map<Vertex, W> tw;
    for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
      Vertex v = *it;
      if (!alive[v]) continue;
      W s = w[v];
      for (Vertex c : t.children[v])
        if (alive[c]) s += tw[c];
      tw[v] = s;
    }
    return tw;
  };

  auto collect_subtree = [&](Vertex v, std::vector<Vertex>* verts, EdgeSet* edges) {
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      verts->push_back(u);
      for (Vertex c : t.children[u])
        if (alive[c]) {
          edges->insert(t.parent_edge[c]);
          stack.push_back(c);
        }
    }
  };

  auto kill = [&](const std::vector<Vertex>& vs) {
    for (Vertex v : vs) alive[v] = 0;
  };

  if (total < p) {
    std::vector<Vertex> all;
    EdgeSet tree;
    collect_subtree(t.order.front(), &all, &tree);
    std::sort(all.begin(), all.end());
    out.groups.push_back(all);
    out.trees.push_back(tree);
    out.single_group_flagged = true;
    return out;
  }

  Vertex root = t.order.front();
  for (;;) {
    std::map<Vertex, W> tw = subtree_weights();
    if (tw[root] <= W(3) * p) break;
    // lowest (deepest) vertex whose alive subtree weighs more than p
    Vertex best = -1;
    for (Vertex v : t.order) {
      if (!alive[v] || tw[v] <= p) continue;
      if (best == -1 || t.depth[v] > t.depth[best] ||
          (t.depth[v] == t.depth[best] && v < best))
        best = v;
    }
    check(best != -1, "grouping: no splittable vertex though w(T) > 3p");
    if (tw[best] <= W(2) * p) {
      std::vector<Vertex> verts;
      EdgeSet tree;
      collect_subtree(best, &verts, &tree);
      kill(verts);
      std::sort(verts.begin(), verts.end());
      out.groups.push_back(verts);
      out.trees.push_back(tree);
    } else {
      W acc = W(0);
      std::vector<Vertex> verts;
      EdgeSet tree;
      for (Vertex c : t.children[best]) {
        if (!alive[c]) continue;
        acc += tw[c];
        tree.insert(t.parent_edge[c]);
        collect_subtree(c, &verts, &tree);
        if (acc >= p) break;
      }
      check(acc >= p, "grouping: prefix sum never reached p");
      kill(verts);
      std::sort(verts.begin(), verts.end());
      out.groups.push_back(verts);
      out.trees.push_back(tree);
    }
  }
  {
    std::vector<Vertex> verts;
    EdgeSet tree;
    collect_subtree(root, &verts, &tree);
    std::sort(verts.begin(), verts.end());
    out.groups.push_back(verts);
    out.trees.push_back(tree);
  }

  // re-verify the three contract bullets exactly
  {
    std::map<Vertex, int> seen;
    std::map<EdgeId, int> tree_use;
    for (std::size_t i = 0; i < out.groups.size(); ++i) {
      W gw = W(0);
      for (Vertex v : out.groups[i]) {
        gw += w[v];
        ++seen[v];
      }
      check(gw >= p && gw <= W(3) * p, "group weight outside [p, 3p]");
      for (EdgeId e : out.trees[i]) ++tree_use[e];
    }
    for (Vertex v : g.vertices()) check(seen[v] == 1, "grouping is not a partition");
    for (const auto& [e, c] : tree_use) check(c == 1, "group trees share an edge");
  }
  return out;
}

// Edge-set variant via the subdivision reduction: each designated edge gets a
// unit-weight midpoint terminal; returned groups are host-edge groups and the
// trees are projected back onto host edges (the two halves of one edge never
// straddle two trees, which the multiset check re-verifies).
struct EdgeGrouping {
  std::vector<std::vector<EdgeId>> groups;
  std::vector<EdgeSet> trees;  // host edge ids
  bool single_group_flagged = false;
};

inline EdgeGrouping group_edges(const MultiGraph& g, const EdgeSet& designated,
                                long long p) {
  for (EdgeId e : designated)
    require(g.has_edge(e), Err::MalformedInput, "group_edges: unknown edge");
  MultiGraph h;
  for (Vertex v : g.vertices()) h.add_vertex(v);
  std::map<Vertex, EdgeId> mid_host;   // midpoint vertex -> host edge
  std::map<EdgeId, EdgeId> half_host;  // h-edge -> host edge
  std::map<Vertex, long long> weights;
  Vertex mid = g.max_vertex_id() + 1;
  for (const auto& [e, ee] : g.edge_map()) {
    if (!designated.count(e)) {
      EdgeId he = h.add_edge(ee.u, ee.v);
      half_host[he] = e;
    } else {
      h.add_vertex(mid);
      half_host[h.add_edge(ee.u, mid)] = e;
      half_host[h.add_edge(mid, ee.v)] = e;
      mid_host[mid] = e;
      weights[mid] = 1;
      ++mid;
    }
  }
  GroupingT<long long> base = group_by_tree<long long>(h, weights, p);
  EdgeGrouping out;
  out.single_group_flagged = base.single_group_flagged;
  for (std::size_t i = 0; i < base.groups.size(); ++i) {
    std::vector<EdgeId> members;
    for (Vertex v : base.groups[i]) {
      auto it = mid_host.find(v);
      if (it != mid_host.end()) members.push_back(it->second);
    }
    if (members.empty() && !base.single_group_flagged) continue;
    std::sort(members.begin(), members.end());
    EdgeSet tree;
    for (EdgeId he : base.trees[i]) tree.insert(half_host.at(he));
    out.groups.push_back(members);
    out.trees.push_back(tree);
  }
  // contract bullets on the host graph
  std::map<EdgeId, int> tree_use, member_seen;
  for (std::size_t i = 0; i < out.groups.size(); ++i) {
    if (!out.single_group_flagged)
      check(static_cast<long long>(out.groups[i].size()) >= p &&
                static_cast<long long>(out.groups[i].size()) <= 3 * p,
            "edge group size outside [p, 3p]");
    for (EdgeId e : out.groups[i]) {
      ++member_seen[e];
      check(out.trees[i].count(e) != 0, "group tree misses a member edge");
    }
    for (EdgeId e : out.trees[i]) ++tree_use[e];
  }
  for (EdgeId e : designated) check(member_seen[e] == 1, "edge grouping not a partition");
  for (const auto& [e, c] : tree_use) check(c == 1, "edge group trees share an edge");
  return out;
}

// Terminal variant: unit weights on terminals, zero elsewhere; groups are
// reported over the terminals only.
struct TerminalGrouping {
  std::vector<std::vector<Vertex>> groups;
  std::vector<EdgeSet> trees;
  bool single_group_flagged = false;
};

inline TerminalGrouping group_terminals(const MultiGraph& g,
                                        const VertexSet& terminals, long long p) {
  std::map<Vertex, long long> weights;
  for (Vertex v : terminals) {
    require(g.has_vertex(v), Err::MalformedInput, "group_terminals: unknown vertex");
    weights[v] = 1;
  }
  GroupingT<long long> base = group_by_tree<long long>(g, weights, p);
  TerminalGrouping out;
  out.single_group_flagged = base.single_group_flagged;
  for (std::size_t i = 0; i < base.groups.size(); ++i) {
    std::vector<Vertex> members;
    for (Vertex v : base.groups[i])
      if (terminals.count(v)) members.push_back(v);
    if (members.empty() && !base.single_group_flagged) continue;
    out.groups.push_back(members);
    out.trees.push_back(base.trees[i]);
  }
  return out;
}

}  // namespace croute
