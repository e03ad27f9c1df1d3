#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "croute/multigraph.hpp"

namespace croute {

// Approximate second eigenvector of the normalized Laplacian by power
// iteration on (I + D^-1/2 A D^-1/2)/2 with the trivial eigenvector
// deflated. Only used to ORDER vertices for sweep cuts; every candidate cut
// is verified exactly afterwards, so no spectral accuracy is assumed.
// Fixed start vector and iteration count keep runs bit-reproducible.
inline std::map<Vertex, double> second_eigenvector(const MultiGraph& g,
                                                   int iterations = 400) {
  std::vector<Vertex> vs = g.vertices();
  const std::size_t n = vs.size();
  std::map<Vertex, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[vs[i]] = i;

  std::vector<double> deg(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) deg[i] = std::max(1, g.degree(vs[i]));

  std::vector<double> u0(n);
  double norm0 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    u0[i] = std::sqrt(deg[i]);
    norm0 += u0[i] * u0[i];
  }
  norm0 = std::sqrt(norm0);
  for (double& x : u0) x /= norm0;

  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = (i % 2 == 0 ? 1.0 : -1.0) + 0.001 * i;

  std::vector<double> y(n);
  for (int it = 0; it < iterations; ++it) {
    double dot = 0;
    for (std::size_t i = 0; i < n; ++i) dot += x[i] * u0[i];
    for (std::size_t i = 0; i < n; ++i) x[i] -= dot * u0[i];
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i];
    for (std::size_t i = 0; i < n; ++i) {
      Vertex v = vs[i];
      for (EdgeId e : g.incident(v)) {
        std::size_t j = idx[g.other_end(e, v)];
        y[i] += x[j] / std::sqrt(deg[i] * deg[j]);
      }
    }
    double norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] *= 0.5;
      norm += y[i] * y[i];
    }
    norm = std::sqrt(norm);
    if (norm < 1e-300) break;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }

  std::map<Vertex, double> out;
  for (std::size_t i = 0; i < n; ++i) out[vs[i]] = x[i] / std::sqrt(deg[i]);
  return out;
}

namespace detail {

// Householder tridiagonalization of a dense symmetric matrix (row-major,
// overwritten). Returns diagonal d and subdiagonal e.
inline void tridiagonalize(std::vector<double>& a, std::size_t n,
                           std::vector<double>& d, std::vector<double>& e) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  d.assign(n, 0.0);
  e.assign(n > 0 ? n - 1 : 0, 0.0);
  std::vector<double> v(n), p(n), w(n);
  for (std::size_t k = 0; k + 3 <= n; ++k) {
    double sigma = 0;
    for (std::size_t i = k + 1; i < n; ++i) sigma += at(i, k) * at(i, k);
    double alpha = std::sqrt(sigma);
    if (alpha < 1e-300) continue;
    if (at(k + 1, k) > 0) alpha = -alpha;
    double r2 = sigma - at(k + 1, k) * alpha;
    if (r2 < 1e-300) continue;
    for (std::size_t i = 0; i < n; ++i) v[i] = 0;
    v[k + 1] = at(k + 1, k) - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = at(i, k);
    const double beta = 1.0 / (2.0 * r2);  // H = I - v v^T / r2... use 2beta
    // p = A v / r2
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0;
      for (std::size_t j = k + 1; j < n; ++j) s += at(i, j) * v[j];
      p[i] = s * 2.0 * beta;
    }
    double vp = 0;
    for (std::size_t i = k + 1; i < n; ++i) vp += v[i] * p[i];
    for (std::size_t i = 0; i < n; ++i) w[i] = p[i] - vp * beta * v[i];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        at(i, j) -= v[i] * w[j] + w[i] * v[j];
    for (std::size_t j = k + 1; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) at(j, i) = at(i, j);
  }
  for (std::size_t i = 0; i < n; ++i) d[i] = at(i, i);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = at(i + 1, i);
}

// Sturm-sequence count of eigenvalues strictly below t for a symmetric
// tridiagonal matrix.
inline std::size_t sturm_count_below(const std::vector<double>& d,
                                     const std::vector<double>& e, double t) {
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double off = i == 0 ? 0.0 : e[i - 1];
    double denom = q;
    if (std::fabs(denom) < 1e-300) denom = denom < 0 ? -1e-300 : 1e-300;
    q = (d[i] - t) - off * off / denom;
    if (q < 0) ++count;
  }
  return count;
}

}  // namespace detail

// Number of Laplacian eigenvalues strictly below t.
inline std::size_t laplacian_eigs_below(const MultiGraph& g, double t) {
  std::vector<Vertex> vs = g.vertices();
  const std::size_t n = vs.size();
  std::map<Vertex, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[vs[i]] = i;
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = g.degree(vs[i]);
  for (const auto& [eid, ee] : g.edge_map()) {
    std::size_t i = idx[ee.u], j = idx[ee.v];
    a[i * n + j] -= 1.0;
    a[j * n + i] -= 1.0;
  }
  std::vector<double> d, e;
  detail::tridiagonalize(a, n, d, e);
  return detail::sturm_count_below(d, e, t);
}

// λ2 of the unnormalized Laplacian by bisection on Sturm counts.
inline double lambda2(const MultiGraph& g) {
  if (g.vertex_count() <= 1) return 0.0;
  double maxdeg = 0;
  for (Vertex v : g.vertices()) maxdeg = std::max(maxdeg, (double)g.degree(v));
  std::vector<Vertex> vs = g.vertices();
  const std::size_t n = vs.size();
  std::map<Vertex, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[vs[i]] = i;
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = g.degree(vs[i]);
  for (const auto& [eid, ee] : g.edge_map()) {
    std::size_t i = idx[ee.u], j = idx[ee.v];
    a[i * n + j] -= 1.0;
    a[j * n + i] -= 1.0;
  }
  std::vector<double> d, e;
  detail::tridiagonalize(a, n, d, e);
  double lo = 0.0, hi = 2.0 * maxdeg + 1.0;
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    if (detail::sturm_count_below(d, e, mid) >= 2)
      hi = mid;
    else
      lo = mid;
  }
  return lo;
}

// Edge-expansion lower bound: |E(S,~S)| >= λ2·|S|·(n-|S|)/n >= λ2·|S|/2 for
// |S| <= n/2, so expansion >= λ2/2.
inline double expansion_spectral_lb(const MultiGraph& g) {
  return lambda2(g) / 2.0;
}

}  // namespace croute
