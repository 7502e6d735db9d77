#pragma once

#include <chrono>
#include <cmath>
#include <random>
#include <span>

#include "cover.hpp"
#include "graph.hpp"

namespace bipspar {

struct PowerParams {
  int iters = 500;
  double tol = 1e-7;
  std::uint64_t seed = 0;
};

struct PowerResult {
  std::vector<double> x;       // unit vector, zero on isolated vertices
  double rayleigh = 0.0;       // Rayleigh quotient of x w.r.t. L
  int iterations = 0;
  bool converged = false;
};

// Approximates the top eigenvector of the normalized Laplacian by power
// iteration. All eigenvalues of L lie in [0, 2], so the largest one dominates
// in magnitude whenever the graph has an edge. The start vector is seeded and
// orthogonalized against D^{1/2} 1 (the 0-eigenvector); kernel components of
// disconnected graphs die after the first multiplication anyway since L maps
// them to zero.
inline PowerResult top_laplacian_vector(const WeightedGraph& g, const PowerParams& params = {}) {
  const VertexId n = g.num_vertices();
  if (g.num_edges() == 0)
    throw std::invalid_argument("top_laplacian_vector: graph has no edges");
  if (params.iters < 1) throw std::invalid_argument("top_laplacian_vector: iters < 1");

  std::vector<double> inv_sqrt_d(static_cast<std::size_t>(n), 0.0);
  std::vector<double> z(static_cast<std::size_t>(n), 0.0);  // D^{1/2} 1 on the support
  double z_norm2 = 0.0;
  for (VertexId v = 0; v < n; ++v) {
    double d = g.degree(v);
    if (d > 0.0) {
      inv_sqrt_d[static_cast<std::size_t>(v)] = 1.0 / std::sqrt(d);
      z[static_cast<std::size_t>(v)] = std::sqrt(d);
      z_norm2 += d;
    }
  }

  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  auto restart = [&] {
    for (VertexId v = 0; v < n; ++v)
      x[static_cast<std::size_t>(v)] = g.degree(v) > 0.0 ? unit(rng) : 0.0;
    double dot = 0.0;
    for (VertexId v = 0; v < n; ++v) dot += x[static_cast<std::size_t>(v)] * z[static_cast<std::size_t>(v)];
    for (VertexId v = 0; v < n; ++v) x[static_cast<std::size_t>(v)] -= dot / z_norm2 * z[static_cast<std::size_t>(v)];
    double norm2 = 0.0;
    for (double c : x) norm2 += c * c;
    if (norm2 <= 0.0) return false;
    double inv = 1.0 / std::sqrt(norm2);
    for (double& c : x) c *= inv;
    return true;
  };
  while (!restart()) {
  }

  // y = L x, restricted to the support
  std::vector<double> y(static_cast<std::size_t>(n), 0.0);
  auto apply = [&] {
    for (VertexId v = 0; v < n; ++v)
      y[static_cast<std::size_t>(v)] =
          inv_sqrt_d[static_cast<std::size_t>(v)] > 0.0 ? x[static_cast<std::size_t>(v)] : 0.0;
    for (const Edge& e : g.edges()) {
      double c = e.w * inv_sqrt_d[static_cast<std::size_t>(e.u)] * inv_sqrt_d[static_cast<std::size_t>(e.v)];
      y[static_cast<std::size_t>(e.u)] -= c * x[static_cast<std::size_t>(e.v)];
      y[static_cast<std::size_t>(e.v)] -= c * x[static_cast<std::size_t>(e.u)];
    }
  };

  PowerResult res;
  double prev_rq = -1.0;
  for (int it = 1; it <= params.iters; ++it) {
    apply();
    double rq = 0.0, y_norm2 = 0.0;
    for (VertexId v = 0; v < n; ++v) {
      rq += x[static_cast<std::size_t>(v)] * y[static_cast<std::size_t>(v)];
      y_norm2 += y[static_cast<std::size_t>(v)] * y[static_cast<std::size_t>(v)];
    }
    res.iterations = it;
    res.rayleigh = rq;
    if (y_norm2 <= 0.0) {
      // x landed exactly in the kernel; re-draw and continue
      while (!restart()) {
      }
      prev_rq = -1.0;
      continue;
    }
    double inv = 1.0 / std::sqrt(y_norm2);
    for (VertexId v = 0; v < n; ++v) x[static_cast<std::size_t>(v)] = y[static_cast<std::size_t>(v)] * inv;
    if (it > 1 && std::abs(rq - prev_rq) < params.tol) {
      res.converged = true;
      break;
    }
    prev_rq = rq;
  }
  res.x = std::move(x);
  return res;
}

struct SweepResult {
  std::vector<VertexId> L;
  std::vector<VertexId> R;
  double beta = 1.0;     // 1 - phibar(L, R)
  int iterations = 0;    // power iterations spent producing the vector
  double seconds = 0.0;  // wall clock of the full finder call
};

// Orders vertices by |x_v| / sqrt(d_v) descending and scans prefixes, putting
// x_v >= 0 into L and x_v < 0 into R. Returns the prefix with the smallest
// bipartiteness ratio beta = 1 - phibar(L, R); ties resolve to the smaller
// prefix. Exactly n prefixes are examined; prefixes with zero volume are not
// evaluable and are skipped.
inline SweepResult two_sided_sweep(const WeightedGraph& g, std::span<const double> x) {
  const VertexId n = g.num_vertices();
  if (static_cast<VertexId>(x.size()) != n)
    throw std::invalid_argument("two_sided_sweep: vector size mismatch");
  bool any = false;
  for (double c : x)
    if (c != 0.0) any = true;
  if (!any) throw std::invalid_argument("two_sided_sweep: all-zero vector");

  std::vector<VertexId> order(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::vector<double> score(static_cast<std::size_t>(n), 0.0);
  for (VertexId v = 0; v < n; ++v) {
    double d = g.degree(v);
    score[static_cast<std::size_t>(v)] =
        d > 0.0 ? std::abs(x[static_cast<std::size_t>(v)]) / std::sqrt(d) : 0.0;
  }
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    double sa = score[static_cast<std::size_t>(a)], sb = score[static_cast<std::size_t>(b)];
    return sa != sb ? sa > sb : a < b;
  });

  // side: 0 = not in prefix, 1 = L (x_v >= 0), 2 = R
  std::vector<char> side(static_cast<std::size_t>(n), 0);
  double cut = 0.0, vol = 0.0;
  double best_beta = 2.0;
  std::size_t best_prefix = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexId v = order[i];
    char s = x[static_cast<std::size_t>(v)] >= 0.0 ? 1 : 2;
    for (const auto& nb : g.neighbors(v)) {
      char t = side[static_cast<std::size_t>(nb.v)];
      if (t != 0 && t != s) cut += nb.w;
    }
    side[static_cast<std::size_t>(v)] = s;
    vol += g.degree(v);
    if (vol <= 0.0) continue;
    double beta = 1.0 - 2.0 * cut / vol;
    if (beta < best_beta) {
      best_beta = beta;
      best_prefix = i + 1;
    }
  }
  if (best_prefix == 0) throw std::domain_error("two_sided_sweep: no prefix with positive volume");

  SweepResult res;
  res.beta = std::clamp(best_beta, 0.0, 1.0);
  for (std::size_t i = 0; i < best_prefix; ++i) {
    VertexId v = order[i];
    (x[static_cast<std::size_t>(v)] >= 0.0 ? res.L : res.R).push_back(v);
  }
  std::sort(res.L.begin(), res.L.end());
  std::sort(res.R.begin(), res.R.end());
  return res;
}

// Power iteration followed by the sweep, with the finder wall clock measured
// around the whole call.
inline SweepResult find_bipartite_cluster(const WeightedGraph& g, const PowerParams& params = {}) {
  auto t0 = std::chrono::steady_clock::now();
  PowerResult power = top_laplacian_vector(g, params);
  SweepResult sweep = two_sided_sweep(g, power.x);
  auto t1 = std::chrono::steady_clock::now();
  sweep.iterations = power.iterations;
  sweep.seconds = std::chrono::duration<double>(t1 - t0).count();
  return sweep;
}

struct DirectedClusterResult {
  ClusterPair pair;
  double flow = 0.0;  // flow ratio of the recovered pair
  int iterations = 0;
  double seconds = 0.0;
};

// Finds a directed bipartite-like cluster by sweeping the semi-double cover
// and mapping the winning set back through the default simplification policy.
inline DirectedClusterResult find_directed_cluster(const WeightedDigraph& g,
                                                   const PowerParams& params = {}) {
  if (g.num_arcs() == 0)
    throw std::invalid_argument("find_directed_cluster: digraph has no arcs");
  auto t0 = std::chrono::steady_clock::now();
  CoverGraph h = semi_double_cover(g);
  PowerResult power = top_laplacian_vector(h.graph, params);
  SweepResult sweep = two_sided_sweep(h.graph, power.x);
  std::vector<VertexId> s;
  s.reserve(sweep.L.size() + sweep.R.size());
  std::merge(sweep.L.begin(), sweep.L.end(), sweep.R.begin(), sweep.R.end(), std::back_inserter(s));
  ClusterPair pair = set_to_pair(h, s);
  double flow = flow_ratio(g, pair);
  auto t1 = std::chrono::steady_clock::now();
  return {std::move(pair), flow, power.iterations,
          std::chrono::duration<double>(t1 - t0).count()};
}

}  // namespace bipspar
