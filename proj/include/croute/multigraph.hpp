#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "croute/base.hpp"

namespace croute {

using VertexSet = std::set<Vertex>;
using EdgeSet = std::set<EdgeId>;

struct EdgeEnds {
  Vertex u, v;
};

// Undirected multigraph with stable edge identities. Parallel edges are
// individually addressable; self-loops are rejected. Ordered containers
// throughout so that iteration order (and hence every downstream
// "arbitrary" choice) is deterministic.
class MultiGraph {
 public:
  Vertex add_vertex() {
    Vertex v = next_vertex_++;
    adj_[v];
    return v;
  }

  void add_vertex(Vertex v) {
    require(v >= 0, Err::MalformedInput, "vertex ids must be non-negative");
    adj_[v];
    if (v >= next_vertex_) next_vertex_ = v + 1;
  }

  EdgeId add_edge(Vertex u, Vertex v) {
    EdgeId id = next_edge_++;
    insert_edge(id, u, v);
    return id;
  }

  void add_edge_with_id(EdgeId id, Vertex u, Vertex v) {
    require(id >= 0, Err::MalformedInput, "edge ids must be non-negative");
    require(!edges_.count(id), Err::MalformedInput, "duplicate edge id");
    insert_edge(id, u, v);
    if (id >= next_edge_) next_edge_ = id + 1;
  }

  void remove_edge(EdgeId id) {
    auto it = edges_.find(id);
    require(it != edges_.end(), Err::MalformedInput, "remove_edge: unknown edge");
    erase_incidence(it->second.u, id);
    erase_incidence(it->second.v, id);
    edges_.erase(it);
  }

  void remove_vertex(Vertex v) {
    auto it = adj_.find(v);
    require(it != adj_.end(), Err::MalformedInput, "remove_vertex: unknown vertex");
    std::vector<EdgeId> inc = it->second;
    for (EdgeId e : inc) remove_edge(e);
    adj_.erase(v);
  }

  bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }
  bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }

  EdgeEnds ends(EdgeId e) const {
    auto it = edges_.find(e);
    require(it != edges_.end(), Err::MalformedInput, "unknown edge id");
    return it->second;
  }

  Vertex other_end(EdgeId e, Vertex v) const {
    EdgeEnds ee = ends(e);
    require(ee.u == v || ee.v == v, Err::MalformedInput, "vertex not on edge");
    return ee.u == v ? ee.v : ee.u;
  }

  const std::vector<EdgeId>& incident(Vertex v) const {
    auto it = adj_.find(v);
    require(it != adj_.end(), Err::MalformedInput, "unknown vertex id");
    return it->second;
  }

  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(adj_.size());
    for (const auto& [v, _] : adj_) out.push_back(v);
    return out;
  }

  std::vector<EdgeId> edge_ids() const {
    std::vector<EdgeId> out;
    out.reserve(edges_.size());
    for (const auto& [e, _] : edges_) out.push_back(e);
    return out;
  }

  const std::map<EdgeId, EdgeEnds>& edge_map() const { return edges_; }

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  Vertex max_vertex_id() const { return adj_.empty() ? -1 : adj_.rbegin()->first; }

  // out_G(S): edges with exactly one endpoint in s.
  EdgeSet out_edges(const VertexSet& s) const {
    EdgeSet out;
    for (Vertex v : s)
      for (EdgeId e : incident(v))
        if (!s.count(other_end(e, v))) out.insert(e);
    return out;
  }

  // E_G(S): edges with both endpoints in s.
  EdgeSet internal_edges(const VertexSet& s) const {
    EdgeSet out;
    for (Vertex v : s)
      for (EdgeId e : incident(v))
        if (s.count(other_end(e, v))) out.insert(e);
    return out;
  }

  bool connected() const {
    if (adj_.empty()) return true;
    return reachable_from(adj_.begin()->first).size() == adj_.size();
  }

  VertexSet reachable_from(Vertex start) const {
    VertexSet seen{start};
    std::vector<Vertex> stack{start};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (EdgeId e : incident(v)) {
        Vertex w = other_end(e, v);
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
    return seen;
  }

  // G[S] together with out(S): keeps the internal edges, the boundary edges
  // and their outside endpoints. Edge ids are preserved.
  MultiGraph induced_with_boundary(const VertexSet& s) const {
    MultiGraph h;
    for (Vertex v : s) {
      require(has_vertex(v), Err::MalformedInput, "induced: unknown vertex");
      h.add_vertex(v);
    }
    for (Vertex v : s)
      for (EdgeId e : incident(v)) {
        Vertex w = other_end(e, v);
        if (h.has_edge(e)) continue;
        if (!h.has_vertex(w)) h.add_vertex(w);
        h.add_edge_with_id(e, v, w);
      }
    return h;
  }

  MultiGraph induced(const VertexSet& s) const {
    MultiGraph h;
    for (Vertex v : s) {
      require(has_vertex(v), Err::MalformedInput, "induced: unknown vertex");
      h.add_vertex(v);
    }
    for (Vertex v : s)
      for (EdgeId e : incident(v)) {
        Vertex w = other_end(e, v);
        if (!h.has_edge(e) && s.count(w)) h.add_edge_with_id(e, v, w);
      }
    return h;
  }

 private:
  void insert_edge(EdgeId id, Vertex u, Vertex v) {
    require(u != v, Err::MalformedInput, "self-loops are not allowed");
    require(has_vertex(u) && has_vertex(v), Err::MalformedInput,
            "edge endpoints must exist");
    edges_[id] = EdgeEnds{u, v};
    adj_[u].push_back(id);
    adj_[v].push_back(id);
  }

  void erase_incidence(Vertex v, EdgeId e) {
    auto& vec = adj_[v];
    vec.erase(std::find(vec.begin(), vec.end(), e));
  }

  std::map<Vertex, std::vector<EdgeId>> adj_;
  std::map<EdgeId, EdgeEnds> edges_;
  Vertex next_vertex_ = 0;
  EdgeId next_edge_ = 0;
};

// Cluster contraction. The cluster becomes one fresh super-node; internal
// edges (and the self-loops they would form) are dropped; boundary edges
// keep their ids, which is what makes out(super) <-> out_G(C) the identity.
struct Contraction {
  MultiGraph graph;
  Vertex super_node;
  VertexSet cluster;
};

inline Contraction contract_cluster(const MultiGraph& g, const VertexSet& c) {
  require(!c.empty(), Err::MalformedInput, "contract_cluster: empty cluster");
  for (Vertex v : c)
    require(g.has_vertex(v), Err::MalformedInput, "contract_cluster: unknown vertex");
  Contraction res;
  res.super_node = g.max_vertex_id() + 1;
  res.cluster = c;
  MultiGraph& h = res.graph;
  for (Vertex v : g.vertices())
    if (!c.count(v)) h.add_vertex(v);
  h.add_vertex(res.super_node);
  for (const auto& [e, ee] : g.edge_map()) {
    bool iu = c.count(ee.u) != 0, iv = c.count(ee.v) != 0;
    if (iu && iv) continue;
    Vertex u = iu ? res.super_node : ee.u;
    Vertex v = iv ? res.super_node : ee.v;
    h.add_edge_with_id(e, u, v);
  }
  return res;
}

// Multiple disjoint clusters at once. Super-node ids are assigned in order
// of each cluster's smallest member, starting right above the host's ids.
struct MultiContraction {
  MultiGraph graph;
  std::map<Vertex, VertexSet> clusters;  // super-node -> members
  std::map<Vertex, Vertex> vertex_to_super;

  Vertex image(Vertex v) const {
    auto it = vertex_to_super.find(v);
    return it == vertex_to_super.end() ? v : it->second;
  }

  VertexSet expand(const VertexSet& side) const {
    VertexSet out;
    for (Vertex v : side) {
      auto it = clusters.find(v);
      if (it == clusters.end())
        out.insert(v);
      else
        out.insert(it->second.begin(), it->second.end());
    }
    return out;
  }
};

inline MultiContraction contract_clusters(const MultiGraph& g,
                                          std::vector<VertexSet> clusters) {
  MultiContraction res;
  std::sort(clusters.begin(), clusters.end(),
            [](const VertexSet& a, const VertexSet& b) {
              require(!a.empty() && !b.empty(), Err::MalformedInput,
                      "contract_clusters: empty cluster");
              return *a.begin() < *b.begin();
            });
  Vertex next = g.max_vertex_id() + 1;
  for (const auto& c : clusters) {
    Vertex super = next++;
    res.clusters[super] = c;
    for (Vertex v : c) {
      require(g.has_vertex(v), Err::MalformedInput, "contract_clusters: unknown vertex");
      require(!res.vertex_to_super.count(v), Err::MalformedInput,
              "contract_clusters: overlapping clusters");
      res.vertex_to_super[v] = super;
    }
  }
  MultiGraph& h = res.graph;
  for (Vertex v : g.vertices())
    if (!res.vertex_to_super.count(v)) h.add_vertex(v);
  for (const auto& [s, _] : res.clusters) h.add_vertex(s);
  for (const auto& [e, ee] : g.edge_map()) {
    Vertex u = res.image(ee.u), v = res.image(ee.v);
    if (u == v) continue;
    h.add_edge_with_id(e, u, v);
  }
  return res;
}

// A path is an alternating vertex/edge sequence; verts.size() == edges.size()+1.
struct Path {
  std::vector<Vertex> verts;
  std::vector<EdgeId> edges;

  Vertex front() const { return verts.front(); }
  Vertex back() const { return verts.back(); }
  bool trivial() const { return edges.empty(); }
};

using PathSet = std::vector<Path>;

inline void check_path(const MultiGraph& g, const Path& p) {
  require(!p.verts.empty(), Err::MalformedInput, "path with no vertices");
  require(p.verts.size() == p.edges.size() + 1, Err::MalformedInput,
          "path vertex/edge counts disagree");
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    EdgeEnds ee = g.ends(p.edges[i]);
    bool fwd = ee.u == p.verts[i] && ee.v == p.verts[i + 1];
    bool bwd = ee.v == p.verts[i] && ee.u == p.verts[i + 1];
    require(fwd || bwd, Err::MalformedInput,
            "path edge not incident to consecutive vertices");
  }
}

inline std::map<EdgeId, int> edge_loads(const PathSet& ps) {
  std::map<EdgeId, int> load;
  for (const Path& p : ps)
    for (EdgeId e : p.edges) ++load[e];
  return load;
}

inline int congestion(const PathSet& ps) {
  int best = 0;
  for (const auto& [e, c] : edge_loads(ps)) best = std::max(best, c);
  return best;
}

inline int congestion_checked(const MultiGraph& g, const PathSet& ps) {
  for (const Path& p : ps) check_path(g, p);
  return congestion(ps);
}

// Shortcut repeated vertices out of a walk; congestion can only decrease.
inline Path simplify_walk(Path p) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<Vertex, std::size_t> first;
    for (std::size_t i = 0; i < p.verts.size(); ++i) {
      auto it = first.find(p.verts[i]);
      if (it == first.end()) {
        first[p.verts[i]] = i;
        continue;
      }
      std::size_t j = it->second;
      p.verts.erase(p.verts.begin() + j + 1, p.verts.begin() + i + 1);
      p.edges.erase(p.edges.begin() + j, p.edges.begin() + i);
      changed = true;
      break;
    }
  }
  return p;
}

inline Path concat_paths(const Path& a, const Path& b) {
  require(a.back() == b.front(), Err::InternalInvariant,
          "concat_paths: endpoints disagree");
  Path out = a;
  out.verts.insert(out.verts.end(), b.verts.begin() + 1, b.verts.end());
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

inline Path reverse_path(Path p) {
  std::reverse(p.verts.begin(), p.verts.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

// BFS path inside an edge-set-restricted subgraph; deterministic tie-breaks
// by visiting incident edges in id order.
inline bool bfs_path(const MultiGraph& g, Vertex s, Vertex t,
                     const EdgeSet* allowed, Path* out) {
  if (s == t) {
    if (out) *out = Path{{s}, {}};
    return true;
  }
  std::map<Vertex, std::pair<Vertex, EdgeId>> parent;
  std::vector<Vertex> frontier{s};
  parent[s] = {s, -1};
  while (!frontier.empty()) {
    std::vector<Vertex> nxt;
    for (Vertex v : frontier) {
      std::vector<EdgeId> inc = g.incident(v);
      std::sort(inc.begin(), inc.end());
      for (EdgeId e : inc) {
        if (allowed && !allowed->count(e)) continue;
        Vertex w = g.other_end(e, v);
        if (parent.count(w)) continue;
        parent[w] = {v, e};
        if (w == t) {
          if (out) {
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
            *out = p;
          }
          return true;
        }
        nxt.push_back(w);
      }
    }
    frontier = std::move(nxt);
  }
  return false;
}

inline long long degree_sum(const MultiGraph& g, const VertexSet& s) {
  long long d = 0;
  for (Vertex v : s) d += g.degree(v);
  return d;
}

}  // namespace croute
