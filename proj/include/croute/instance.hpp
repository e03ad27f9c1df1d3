#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "croute/multigraph.hpp"

namespace croute {

// An EDP instance: graph, demand pairs, and (after normalization) the
// gadget back-mapping. Boundary edges of every gadget keep their original
// edge ids, so mapping a routing back is pure bookkeeping.
struct Instance {
  MultiGraph g;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::map<Vertex, Vertex> back_map;  // new vertex -> original vertex
  EdgeSet gadget_edges;               // edges with no original counterpart

  VertexSet terminals() const {
    VertexSet t;
    for (auto [s, u] : pairs) {
      t.insert(s);
      t.insert(u);
    }
    return t;
  }

  Vertex original_of(Vertex v) const {
    auto it = back_map.find(v);
    return it == back_map.end() ? v : it->second;
  }
};

inline void check_instance(const Instance& inst) {
  for (auto [s, t] : inst.pairs) {
    require(inst.g.has_vertex(s) && inst.g.has_vertex(t), Err::MalformedInput,
            "demand endpoint is not a vertex");
    require(s != t, Err::MalformedInput, "demand pair with equal endpoints");
  }
}

// Normalized means: every terminal has degree 1 and participates in exactly
// one pair, and the maximum vertex degree is 4.
inline bool is_normalized(const Instance& inst) {
  std::map<Vertex, int> uses;
  for (auto [s, t] : inst.pairs) {
    ++uses[s];
    ++uses[t];
  }
  for (const auto& [v, c] : uses)
    if (c != 1 || inst.g.degree(v) != 1) return false;
  for (Vertex v : inst.g.vertices())
    if (inst.g.degree(v) > 4) return false;
  return true;
}

// The §2 transformation chain: split multi-pair terminals onto pendant
// terminals, re-home high-degree terminals onto pendants, then replace each
// non-terminal vertex of degree d > 4 by a d×d grid attached along its
// first row. Idempotent on already-normalized instances.
inline Instance normalize(const Instance& raw) {
  check_instance(raw);
  if (is_normalized(raw)) return raw;

  Instance inst;
  inst.g = raw.g;
  inst.pairs = raw.pairs;

  auto fresh = [&]() { return inst.g.max_vertex_id() + 1; };

  // terminals participating in several pairs
  {
    std::map<Vertex, int> uses;
    for (auto [s, t] : inst.pairs) {
      ++uses[s];
      ++uses[t];
    }
    for (auto& pr : inst.pairs) {
      for (Vertex* side : {&pr.first, &pr.second}) {
        Vertex v = *side;
        if (uses[v] <= 1) continue;
        Vertex nv = fresh();
        inst.g.add_vertex(nv);
        EdgeId e = inst.g.add_edge(v, nv);
        inst.gadget_edges.insert(e);
        inst.back_map[nv] = raw.back_map.count(v) ? raw.back_map.at(v) : v;
        *side = nv;
      }
    }
  }

  // terminals whose degree is not 1 move onto a pendant
  for (auto& pr : inst.pairs) {
    for (Vertex* side : {&pr.first, &pr.second}) {
      Vertex v = *side;
      if (inst.g.degree(v) == 1) continue;
      Vertex nv = fresh();
      inst.g.add_vertex(nv);
      EdgeId e = inst.g.add_edge(v, nv);
      inst.gadget_edges.insert(e);
      inst.back_map[nv] = inst.back_map.count(v) ? inst.back_map.at(v) : v;
      *side = nv;
    }
  }

  // grid-expand non-terminal vertices of degree > 4
  VertexSet terms = inst.terminals();
  std::vector<Vertex> todo;
  for (Vertex v : inst.g.vertices())
    if (!terms.count(v) && inst.g.degree(v) > 4) todo.push_back(v);
  for (Vertex v : todo) {
    const int d = inst.g.degree(v);
    std::vector<EdgeId> inc = inst.g.incident(v);
    std::sort(inc.begin(), inc.end());
    Vertex orig = inst.back_map.count(v) ? inst.back_map.at(v) : v;

    // d×d grid; row 0 holds the attachment vertices u'_1..u'_d
    std::vector<std::vector<Vertex>> cell(d, std::vector<Vertex>(d));
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        Vertex nv = fresh();
        inst.g.add_vertex(nv);
        inst.back_map[nv] = orig;
        cell[r][c] = nv;
      }
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        if (c + 1 < d)
          inst.gadget_edges.insert(inst.g.add_edge(cell[r][c], cell[r][c + 1]));
        if (r + 1 < d)
          inst.gadget_edges.insert(inst.g.add_edge(cell[r][c], cell[r + 1][c]));
      }
    for (int i = 0; i < d; ++i) {
      EdgeId e = inc[i];
      Vertex other = inst.g.other_end(e, v);
      bool was_gadget = inst.gadget_edges.count(e) != 0;
      inst.g.remove_edge(e);
      inst.g.add_edge_with_id(e, other, cell[0][i]);
      if (was_gadget) inst.gadget_edges.insert(e);
    }
    inst.g.remove_vertex(v);
    inst.back_map.erase(v);
  }

  // carry any pre-existing mapping through
  for (const auto& [nv, ov] : raw.back_map)
    if (inst.g.has_vertex(nv) && !inst.back_map.count(nv)) inst.back_map[nv] = ov;
  for (EdgeId e : raw.gadget_edges)
    if (inst.g.has_edge(e)) inst.gadget_edges.insert(e);

  check(is_normalized(inst), "normalize failed to reach normal form");
  for (Vertex v : inst.g.vertices())
    check(inst.g.degree(v) >= 1 || raw.g.has_vertex(v),
          "normalize created an isolated vertex");
  return inst;
}

// Map a routing in the normalized graph back to the original graph. Gadget
// edges collapse (their endpoints map to one original vertex); original
// edges keep their ids, so per-edge load never increases.
inline PathSet map_back(const Instance& normalized, const Instance& original,
                        const PathSet& paths) {
  PathSet out;
  for (const Path& p : paths) {
    check_path(normalized.g, p);
    Path q;
    q.verts.push_back(normalized.original_of(p.verts.front()));
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      EdgeId e = p.edges[i];
      Vertex to = normalized.original_of(p.verts[i + 1]);
      if (normalized.gadget_edges.count(e)) {
        check(to == q.verts.back(),
              "gadget edge crosses between distinct original vertices");
        continue;
      }
      require(original.g.has_edge(e), Err::InternalInvariant,
              "mapped path uses an edge unknown to the original graph");
      q.verts.push_back(to);
      q.edges.push_back(e);
    }
    out.push_back(simplify_walk(std::move(q)));
  }
  return out;
}

}  // namespace croute
