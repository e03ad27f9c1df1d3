#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "croute/cut_oracle.hpp"
#include "croute/multigraph.hpp"

namespace croute {

// Oracle-based well-linked decomposition. The partition starts as {S} and is
// refined by verified (k,α)-violating cuts until the oracle finds none. The
// boundary-charge inequality Σ|out(W)| ≤ |out(S)|·(1+1/(64γ)) is re-checked
// by exact counting after every split (it holds for every intermediate
// partition, not just the final one). The inequality is a theorem only for
// α ≤ α(k); enforce_charge_bound is set by in-regime callers.
struct Decomposition {
  VertexSet host;
  std::vector<VertexSet> clusters;
  long long out_s = 0;
  long long max_sum_out = 0;
  bool charge_bound_ok = true;
  long long splits = 0;
};

struct DecomposeOptions {
  long long k = 0;
  Rat alpha;
  long long gamma_charge = 1;  // γ in the charge bound
  bool enforce_charge_bound = true;
};

using ClusterOracle =
    std::function<std::optional<ViolatingCut>(const VertexSet&)>;

inline Decomposition decompose(const MultiGraph& g, const VertexSet& s,
                               const DecomposeOptions& opt,
                               const ClusterOracle& oracle) {
  require(!s.empty(), Err::Precondition, "decompose: empty set");
  require(opt.gamma_charge >= 1, Err::Precondition, "decompose: gamma < 1");
  Decomposition d;
  d.host = s;
  d.out_s = static_cast<long long>(g.out_edges(s).size());
  d.clusters = {s};
  d.max_sum_out = d.out_s;

  auto charge_check = [&]() {
    long long sum = 0;
    for (const auto& w : d.clusters)
      sum += static_cast<long long>(g.out_edges(w).size());
    d.max_sum_out = std::max(d.max_sum_out, sum);
    // 64γ·Σ ≤ (64γ+1)·|out(S)| in exact integers
    bool ok = 64 * opt.gamma_charge * sum <= (64 * opt.gamma_charge + 1) * d.out_s;
    if (!ok) d.charge_bound_ok = false;
    require(ok || !opt.enforce_charge_bound, Err::InternalInvariant,
            "well-linked decomposition violates the boundary charge bound");
  };
  charge_check();

  // largest boundary first; splits strictly shrink a cluster so this ends
  for (;;) {
    std::vector<std::size_t> order(d.clusters.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      auto oa = g.out_edges(d.clusters[a]).size();
      auto ob = g.out_edges(d.clusters[b]).size();
      if (oa != ob) return oa > ob;
      return d.clusters[a] < d.clusters[b];
    });
    bool split_done = false;
    for (std::size_t idx : order) {
      const VertexSet& w = d.clusters[idx];
      if (w.size() < 2) continue;
      std::optional<ViolatingCut> vc = oracle(w);
      if (!vc) continue;
      require(recheck_violating(g, w, *vc, opt.k, opt.alpha),
              Err::ContractViolation,
              "oracle returned a non-violating cut");
      long long out_w = static_cast<long long>(g.out_edges(w).size());
      VertexSet x = vc->x, y = vc->y;
      d.clusters.erase(d.clusters.begin() + idx);
      d.clusters.push_back(x);
      d.clusters.push_back(y);
      check(static_cast<long long>(g.out_edges(x).size()) <= out_w &&
                static_cast<long long>(g.out_edges(y).size()) <= out_w,
            "split increased a cluster boundary");
      ++d.splits;
      charge_check();
      split_done = true;
      break;
    }
    if (!split_done) break;
  }
  return d;
}

// Corollary-style decomposition of a set with |out(S)| ≤ k: every returned
// cluster has |out(W)| ≤ k, and in the exact-oracle regime each cluster is
// certifiably (k,α)-well-linked (the oracle found no violating cut).
inline Decomposition decompose_bounded(const MultiGraph& g, const VertexSet& s,
                                       long long k, const Rat& alpha,
                                       long long gamma_charge,
                                       const OracleOptions& oracle_opts = {},
                                       bool enforce_charge_bound = true) {
  require(static_cast<long long>(g.out_edges(s).size()) <= k, Err::Precondition,
          "decompose_bounded: |out(S)| exceeds k");
  DecomposeOptions opt;
  opt.k = k;
  opt.alpha = alpha;
  opt.gamma_charge = gamma_charge;
  opt.enforce_charge_bound = enforce_charge_bound;
  ClusterOracle oracle = [&](const VertexSet& w) {
    return find_violating_cut(g, w, g.out_edges(w), k, alpha, oracle_opts);
  };
  Decomposition d = decompose(g, s, opt, oracle);
  for (const auto& w : d.clusters)
    check(static_cast<long long>(g.out_edges(w).size()) <= k,
          "decompose_bounded: cluster boundary exceeds k");
  return d;
}

}  // namespace croute
