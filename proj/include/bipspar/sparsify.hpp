#pragma once

#include <cmath>
#include <optional>

#include "graph.hpp"
#include "hashing.hpp"
#include "spectral.hpp"

namespace bipspar {

// Oversampling configuration. alpha stands in for the composite factor
// C log^3(n) / (2 - lambda_{n-k}); the auto mode computes that factor from the
// spectrum (small graphs only), the explicit mode takes it as given.
struct SparsifyConfig {
  enum class Mode { ExplicitAlpha, AutoAlpha };

  double alpha = 0.0;
  std::uint64_t seed = 0;
  Mode mode = Mode::ExplicitAlpha;
  int auto_k = 0;  // the k used when mode == AutoAlpha
};

// Default oversampling when nothing better is known: 12 ln n.
inline double default_alpha(VertexId n) {
  return 12.0 * std::log(static_cast<double>(std::max<VertexId>(n, 2)));
}

inline SparsifyConfig explicit_alpha_config(double alpha, std::uint64_t seed) {
  if (!(alpha > 0.0)) throw std::invalid_argument("SparsifyConfig: alpha must be positive");
  return {alpha, seed, SparsifyConfig::Mode::ExplicitAlpha, 0};
}

// alpha = c0 ln^3(n) / (2 - lambda_{n-k}). Requires a dense eigensolve, so
// n <= kMaxDenseEigensolve.
inline SparsifyConfig auto_alpha_config(const WeightedGraph& g, int k, std::uint64_t seed,
                                        double c0 = 1.0) {
  VertexId n = g.num_vertices();
  if (k < 1 || k >= n) throw std::invalid_argument("auto_alpha_config: need 1 <= k < n");
  auto spectrum = eigenvalues(normalized_laplacian(g));
  double lambda = spectrum[static_cast<std::size_t>(n - k - 1)];  // lambda_{n-k}, 1-indexed
  double gap = 2.0 - lambda;
  if (gap <= 1e-12)
    throw std::domain_error("auto_alpha_config: 2 - lambda_{n-k} vanishes (k bipartite components)");
  double logn = std::log(static_cast<double>(n));
  return {c0 * logn * logn * logn / gap, seed, SparsifyConfig::Mode::AutoAlpha, k};
}

struct EdgeProbability {
  double p_u, p_v, p_e;
};

// p_u = min{w alpha / d_u, 1}, p_v likewise, p_e = p_u + p_v - p_u p_v.
// Satisfies (p_u + p_v)/2 <= p_e <= min(1, p_u + p_v).
inline EdgeProbability edge_probability(double w, double d_u, double d_v, double alpha) {
  if (!(w > 0.0) || !(d_u > 0.0) || !(d_v > 0.0) || !(alpha > 0.0))
    throw std::invalid_argument("edge_probability: inputs must be positive");
  if (d_u < w || d_v < w)
    throw std::invalid_argument("edge_probability: degree smaller than incident edge weight");
  double p_u = std::min(w * alpha / d_u, 1.0);
  double p_v = std::min(w * alpha / d_v, 1.0);
  return {p_u, p_v, p_u + p_v - p_u * p_v};
}

struct SampledEdge {
  VertexId u, v;          // canonical, u < v
  double original_weight;
  double probability;     // p_e in (0, 1]
  double reweighted;      // original_weight / p_e
};

// The per-edge decision is a pure function of (seed, canonical edge key), so
// streams may be replayed in any order, split across workers, or re-run, and
// the kept set never changes.
template <class DegreeOracle>
inline std::optional<SampledEdge> sample_edge(const Edge& e, DegreeOracle&& degree_of,
                                              const SparsifyConfig& cfg) {
  double d_u = degree_of(e.u);
  double d_v = degree_of(e.v);
  if (d_u < e.w || d_v < e.w)
    throw std::invalid_argument("sparsify: degree oracle inconsistent at edge {" +
                                std::to_string(e.u) + "," + std::to_string(e.v) +
                                "}: degree below edge weight");
  EdgeProbability p = edge_probability(e.w, d_u, d_v, cfg.alpha);
  VertexId a = std::min(e.u, e.v), b = std::max(e.u, e.v);
  if (hash_unit(cfg.seed, static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)) >= p.p_e)
    return std::nullopt;
  return SampledEdge{a, b, e.w, p.p_e, e.w / p.p_e};
}

// Online sparsification of an edge stream. The oracle must return final
// degrees d_G(u); edges arriving with weight above their endpoint's reported
// degree trip an inconsistency error. Kept edges carry weight w / p_e.
template <class EdgeRange, class DegreeOracle>
inline WeightedGraph sparsify_stream(VertexId n, const EdgeRange& edges, DegreeOracle&& degree_of,
                                     const SparsifyConfig& cfg) {
  if (!(cfg.alpha > 0.0)) throw std::invalid_argument("sparsify_stream: alpha must be positive");
  std::vector<Edge> kept;
  for (const Edge& e : edges)
    if (auto s = sample_edge(e, degree_of, cfg)) kept.push_back({s->u, s->v, s->reweighted});
  return WeightedGraph(n, std::move(kept));
}

// Two-pass convenience for materialized graphs: the graph itself is the
// degree oracle.
inline WeightedGraph sparsify(const WeightedGraph& g, const SparsifyConfig& cfg) {
  return sparsify_stream(
      g.num_vertices(), g.edges(), [&g](VertexId v) { return g.degree(v); }, cfg);
}

// Exact expected number of kept edges, sum of p_e.
inline double expected_edge_count(const WeightedGraph& g, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("expected_edge_count: alpha must be positive");
  double sum = 0.0;
  for (const Edge& e : g.edges())
    sum += edge_probability(e.w, g.degree(e.u), g.degree(e.v), alpha).p_e;
  return sum;
}

}  // namespace bipspar
