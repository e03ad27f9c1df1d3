#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "croute/multigraph.hpp"
#include "croute/spectral.hpp"

namespace croute {

// ---------------------------------------------------------------------------
// Sparsity Ψ(S,~S) = |E(S,~S)| / min(w(S), w(~S)).
// Vertex-terminal mode carries explicit weights; edge-terminal mode treats a
// designated edge set as unit-weight terminals (conceptually subdividing each
// with a terminal vertex; a terminal on a split edge joins whichever side
// balances the weights, which can only make the reported sparsity smaller).
// ---------------------------------------------------------------------------
struct SparsestCutInstance {
  const MultiGraph* g = nullptr;
  std::map<Vertex, long long> weights;
  EdgeSet edge_terminals;

  bool edge_mode() const { return !edge_terminals.empty(); }
};

inline Rat sparsity(const SparsestCutInstance& inst, const VertexSet& cut) {
  const MultiGraph& g = *inst.g;
  for (Vertex v : cut)
    require(g.has_vertex(v), Err::MalformedInput, "sparsity: unknown vertex in cut");
  long long crossing = 0;
  for (const auto& [e, ee] : g.edge_map()) {
    bool iu = cut.count(ee.u) != 0, iv = cut.count(ee.v) != 0;
    if (iu != iv && !inst.edge_terminals.count(e)) ++crossing;
  }
  long long w_in = 0, w_out = 0, free_terms = 0;
  if (!inst.edge_mode()) {
    for (const auto& [v, w] : inst.weights) {
      require(w >= 0, Err::MalformedInput, "sparsity: negative weight");
      (cut.count(v) ? w_in : w_out) += w;
    }
  } else {
    for (EdgeId e : inst.edge_terminals) {
      EdgeEnds ee = g.ends(e);
      bool iu = cut.count(ee.u) != 0, iv = cut.count(ee.v) != 0;
      if (iu && iv)
        ++w_in;
      else if (!iu && !iv)
        ++w_out;
      else {
        ++crossing;   // one half of the subdivided edge crosses
        ++free_terms; // t_e may sit on either side
      }
    }
  }
  // place free terminals to maximize the smaller side
  long long best_min = -1;
  for (long long a = 0; a <= free_terms; ++a)
    best_min = std::max(best_min, std::min(w_in + a, w_out + free_terms - a));
  require(best_min > 0, Err::DegenerateCut,
          "sparsity: cut has zero terminal weight on one side");
  return Rat(crossing) / Rat(best_min);
}

// ---------------------------------------------------------------------------
// (k,α)-violating cuts. A bipartition (X,Y) of S violates iff
// |E(X,Y)| < α·min(|T1|,|T2|) for witness sets T1 ⊆ Γ∩out(X), T2 ⊆ Γ∩out(Y)
// with |T1|+|T2| ≤ k; the best achievable min is min(t1, t2, ⌊k/2⌋).
// Every returned cut is re-verified against this inequality before return.
// ---------------------------------------------------------------------------
struct ViolatingCut {
  VertexSet x, y;
  EdgeSet t1, t2;
  long long cut_edges = 0;  // |E(X,Y)|
};

enum class OracleMode { Exact, Spectral, Auto };

struct OracleOptions {
  OracleMode mode = OracleMode::Auto;
  std::size_t exact_size_bound = 22;
  int sweep_iterations = 400;
};

namespace detail {

struct CutTest {
  long long cut_edges;
  long long t1, t2;        // boundary-terminal counts per side
  long long usable_min;    // min(t1, t2, floor(k/2))
};

inline CutTest evaluate_bipartition(const MultiGraph& g, const VertexSet& s,
                                    const VertexSet& x, const EdgeSet& gamma,
                                    long long k) {
  CutTest t{0, 0, 0, 0};
  for (Vertex v : x)
    for (EdgeId e : g.incident(v)) {
      Vertex w = g.other_end(e, v);
      if (s.count(w) && !x.count(w)) ++t.cut_edges;
    }
  for (EdgeId e : gamma) {
    EdgeEnds ee = g.ends(e);
    Vertex inside = s.count(ee.u) ? ee.u : ee.v;
    (x.count(inside) ? t.t1 : t.t2) += 1;
  }
  t.usable_min = std::min({t.t1, t.t2, k / 2});
  return t;
}

inline bool is_violating(const CutTest& t, const Rat& alpha) {
  return t.usable_min > 0 && Rat(t.cut_edges) < alpha * Rat(t.usable_min);
}

inline ViolatingCut materialize(const MultiGraph& g, const VertexSet& s,
                                const VertexSet& x, const EdgeSet& gamma,
                                const CutTest& t) {
  ViolatingCut vc;
  vc.x = x;
  for (Vertex v : s)
    if (!x.count(v)) vc.y.insert(v);
  for (EdgeId e : gamma) {
    EdgeEnds ee = g.ends(e);
    Vertex inside = s.count(ee.u) ? ee.u : ee.v;
    bool in_x = x.count(inside) != 0;
    if (in_x && static_cast<long long>(vc.t1.size()) < t.usable_min)
      vc.t1.insert(e);
    else if (!in_x && static_cast<long long>(vc.t2.size()) < t.usable_min)
      vc.t2.insert(e);
  }
  vc.cut_edges = t.cut_edges;
  return vc;
}

}  // namespace detail

// Re-check a ViolatingCut by independent counting (used by callers that must
// not trust the oracle).
inline bool recheck_violating(const MultiGraph& g, const VertexSet& s,
                              const ViolatingCut& vc, long long k,
                              const Rat& alpha) {
  VertexSet uni = vc.x;
  uni.insert(vc.y.begin(), vc.y.end());
  if (uni != s || vc.x.empty() || vc.y.empty()) return false;
  for (Vertex v : vc.x)
    if (vc.y.count(v)) return false;
  long long crossing = 0;
  for (Vertex v : vc.x)
    for (EdgeId e : g.incident(v))
      if (vc.y.count(g.other_end(e, v))) ++crossing;
  if (crossing != vc.cut_edges) return false;
  if (static_cast<long long>(vc.t1.size() + vc.t2.size()) > k) return false;
  for (EdgeId e : vc.t1) {
    EdgeEnds ee = g.ends(e);
    Vertex inside = s.count(ee.u) ? ee.u : ee.v;
    if (!vc.x.count(inside)) return false;
    if (s.count(ee.u) && s.count(ee.v)) return false;  // must be boundary
  }
  for (EdgeId e : vc.t2) {
    EdgeEnds ee = g.ends(e);
    Vertex inside = s.count(ee.u) ? ee.u : ee.v;
    if (!vc.y.count(inside)) return false;
    if (s.count(ee.u) && s.count(ee.v)) return false;
  }
  long long m = std::min(vc.t1.size(), vc.t2.size());
  return m > 0 && Rat(crossing) < alpha * Rat(m);
}

// Violating-cut oracle for S with boundary-terminal set gamma (Γ ⊆ out(S)).
// Exact mode enumerates all bipartitions (refused above the size bound);
// spectral mode sweeps the second eigenvector of the cluster graph with
// terminal stubs, testing each prefix and every singleton exactly. Spectral
// None carries no guarantee; any Some is genuinely violating.
inline std::optional<ViolatingCut> find_violating_cut(
    const MultiGraph& g, const VertexSet& s, const EdgeSet& gamma, long long k,
    const Rat& alpha, const OracleOptions& opts = {}) {
  require(alpha > 0 && alpha < 1, Err::Precondition, "alpha must be in (0,1)");
  require(k >= 1, Err::Precondition, "k must be >= 1");
  require(!s.empty(), Err::Precondition, "empty cluster");
  for (EdgeId e : gamma) {
    EdgeEnds ee = g.ends(e);
    require(s.count(ee.u) + s.count(ee.v) == 1, Err::Precondition,
            "gamma must be boundary edges of s");
  }
  if (s.size() == 1 || gamma.empty()) return std::nullopt;

  OracleMode mode = opts.mode;
  if (mode == OracleMode::Auto)
    mode = s.size() <= opts.exact_size_bound ? OracleMode::Exact
                                             : OracleMode::Spectral;

  std::vector<Vertex> verts(s.begin(), s.end());
  auto consider = [&](const VertexSet& x,
                      std::optional<std::pair<Rat, ViolatingCut>>& best) {
    if (x.empty() || x.size() == s.size()) return;
    detail::CutTest t = detail::evaluate_bipartition(g, s, x, gamma, k);
    if (!detail::is_violating(t, alpha)) return;
    Rat ratio = Rat(t.cut_edges) / Rat(t.usable_min);
    ViolatingCut vc = detail::materialize(g, s, x, gamma, t);
    if (!best || ratio < best->first ||
        (ratio == best->first && vc.x < best->second.x))
      best = {ratio, vc};
  };

  std::optional<std::pair<Rat, ViolatingCut>> best;
  if (mode == OracleMode::Exact) {
    require(s.size() <= opts.exact_size_bound, Err::OracleTooLarge,
            "exact oracle refused: cluster above size bound");
    const std::size_t n = verts.size();
    for (std::uint64_t mask = 1; mask < (1ULL << (n - 1)); ++mask) {
      VertexSet x{verts[0]};
      for (std::size_t i = 1; i < n; ++i)
        if (mask & (1ULL << (i - 1))) x.insert(verts[i]);
      consider(x, best);
    }
  } else {
    // cluster graph with one stub per terminal edge, hanging off its inside
    // endpoint; stubs pull the eigenvector apart along the terminal mass
    MultiGraph h = g.induced(s);
    Vertex stub = (g.max_vertex_id() + 1);
    for (EdgeId e : gamma) {
      EdgeEnds ee = g.ends(e);
      Vertex inside = s.count(ee.u) ? ee.u : ee.v;
      h.add_vertex(stub);
      h.add_edge(inside, stub);
      ++stub;
    }
    std::map<Vertex, double> vec = second_eigenvector(h, opts.sweep_iterations);
    std::vector<Vertex> order = verts;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      if (vec[a] != vec[b]) return vec[a] < vec[b];
      return a < b;
    });
    VertexSet x;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      x.insert(order[i]);
      consider(x, best);
    }
    for (Vertex v : verts) consider(VertexSet{v}, best);
  }

  if (!best) return std::nullopt;
  check(recheck_violating(g, s, best->second, k, alpha),
        "oracle produced a non-violating cut");
  return best->second;
}

// ---------------------------------------------------------------------------
// Approximate sparsest cut w.r.t. rational vertex weights: exact enumeration
// below the size bound, otherwise sweep + singletons. Used by the
// flow-well-linked instance partition; Some(cut) always has Ψ < threshold.
// ---------------------------------------------------------------------------
struct WeightedCut {
  VertexSet side;
  Rat psi;
  long long crossing = 0;
};

inline std::optional<WeightedCut> sparsest_cut_below(
    const MultiGraph& g, const std::map<Vertex, Rat>& w, const Rat& threshold,
    const OracleOptions& opts = {}) {
  std::vector<Vertex> verts = g.vertices();
  if (verts.size() < 2) return std::nullopt;
  Rat total = 0;
  for (const auto& [v, wv] : w) total += wv;
  if (total <= 0) return std::nullopt;

  auto eval = [&](const VertexSet& x) -> std::optional<WeightedCut> {
    Rat wx = 0;
    for (Vertex v : x) {
      auto it = w.find(v);
      if (it != w.end()) wx += it->second;
    }
    Rat other = total - wx;
    Rat mn = wx < other ? wx : other;
    if (mn <= 0) return std::nullopt;
    long long crossing = 0;
    for (Vertex v : x)
      for (EdgeId e : g.incident(v))
        if (!x.count(g.other_end(e, v))) ++crossing;
    Rat psi = Rat(crossing) / mn;
    if (psi >= threshold) return std::nullopt;
    return WeightedCut{x, psi, crossing};
  };

  std::optional<WeightedCut> best;
  auto consider = [&](const VertexSet& x) {
    auto c = eval(x);
    if (c && (!best || c->psi < best->psi ||
              (c->psi == best->psi && c->side < best->side)))
      best = c;
  };

  if (verts.size() <= opts.exact_size_bound) {
    const std::size_t n = verts.size();
    for (std::uint64_t mask = 1; mask < (1ULL << (n - 1)); ++mask) {
      VertexSet x{verts[0]};
      for (std::size_t i = 1; i < n; ++i)
        if (mask & (1ULL << (i - 1))) x.insert(verts[i]);
      consider(x);
    }
  } else {
    std::map<Vertex, double> vec = second_eigenvector(g, opts.sweep_iterations);
    std::vector<Vertex> order = verts;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      if (vec[a] != vec[b]) return vec[a] < vec[b];
      return a < b;
    });
    VertexSet x;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      x.insert(order[i]);
      consider(x);
    }
    for (Vertex v : verts) consider(VertexSet{v});
  }
  return best;
}

}  // namespace croute
