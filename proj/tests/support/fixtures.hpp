#pragma once

#include <map>
#include <utility>
#include <vector>

#include "croute/base.hpp"
#include "croute/multigraph.hpp"

namespace fixtures {

using namespace croute;

inline MultiGraph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
  MultiGraph g;
  for (int v = 1; v <= n; ++v) g.add_vertex(v);
  for (auto [u, v] : es) g.add_edge(u, v);
  return g;
}

inline MultiGraph triangle() { return from_edges(3, {{1, 2}, {1, 3}, {2, 3}}); }

inline MultiGraph k4() {
  return from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

inline MultiGraph complete(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) es.push_back({i, j});
  return from_edges(n, es);
}

inline MultiGraph path_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
  return from_edges(n, es);
}

inline MultiGraph cycle(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
  es.push_back({n, 1});
  return from_edges(n, es);
}

inline MultiGraph star(int leaves) {
  std::vector<std::pair<int, int>> es;
  for (int i = 2; i <= leaves + 1; ++i) es.push_back({1, i});
  return from_edges(leaves + 1, es);
}

// two cliques of size sz joined by one bridge (1..sz | sz+1..2sz)
inline MultiGraph two_cliques_bridge(int sz) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= sz; ++i)
    for (int j = i + 1; j <= sz; ++j) es.push_back({i, j});
  for (int i = sz + 1; i <= 2 * sz; ++i)
    for (int j = i + 1; j <= 2 * sz; ++j) es.push_back({i, j});
  es.push_back({sz, sz + 1});
  return from_edges(2 * sz, es);
}

inline MultiGraph grid(int rows, int cols) {
  auto id = [cols](int r, int c) { return r * cols + c + 1; };
  std::vector<std::pair<int, int>> es;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) es.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) es.push_back({id(r, c), id(r + 1, c)});
    }
  return from_edges(rows * cols, es);
}

inline MultiGraph hypercube(int d) {
  int n = 1 << d;
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (v < (v ^ (1 << b))) es.push_back({v + 1, (v ^ (1 << b)) + 1});
  return from_edges(n, es);
}

// configuration-model d-regular multigraph; rejects self-loops, keeps
// parallels (we are a multigraph library after all)
inline MultiGraph random_regular(int n, int d, Rng& rng) {
  require(n * d % 2 == 0, Err::Precondition, "nd must be even");
  for (int attempt = 0; attempt < 400; ++attempt) {
    std::vector<int> stubs;
    for (int v = 1; v <= n; ++v)
      for (int i = 0; i < d; ++i) stubs.push_back(v);
    rng.shuffle(stubs);
    std::vector<std::pair<int, int>> es;
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) {
        ok = false;
        break;
      }
      es.push_back({stubs[i], stubs[i + 1]});
    }
    if (!ok) continue;
    MultiGraph g = from_edges(n, es);
    if (!g.connected()) continue;
    return g;
  }
  fail(Err::StochasticFailure, "random_regular: no loop-free pairing found");
}

inline std::vector<std::pair<Vertex, Vertex>> random_pairs(const MultiGraph& g,
                                                           int k, Rng& rng) {
  std::vector<Vertex> vs = g.vertices();
  rng.shuffle(vs);
  require(static_cast<int>(vs.size()) >= 2 * k, Err::Precondition,
          "not enough vertices for pairs");
  std::vector<std::pair<Vertex, Vertex>> out;
  for (int i = 0; i < k; ++i) out.push_back({vs[2 * i], vs[2 * i + 1]});
  return out;
}

}  // namespace fixtures
