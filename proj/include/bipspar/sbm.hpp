#pragma once

#include <utility>

#include "graph.hpp"
#include "hashing.hpp"

namespace bipspar {

// Two-block stochastic block model. Undirected: cross pairs connect with
// probability p, intra pairs with q. Directed: L→R pairs carry an arc with
// probability eta, R→L with 1-eta, intra-partition ordered pairs with 9/n1
// (resp. 9/n2). All edges have weight 1. Pair decisions are counter-based on
// the seed, so generation is order-independent and shardable.
struct SbmSpec {
  VertexId n1 = 0;
  VertexId n2 = 0;
  double p = 0.0;    // undirected cross probability
  double q = 0.0;    // undirected intra probability
  double eta = 0.0;  // directed L→R probability
  std::uint64_t seed = 0;
};

namespace detail {

inline void check_partitions(const SbmSpec& s) {
  if (s.n1 < 1 || s.n2 < 1) throw std::invalid_argument("SbmSpec: n1 and n2 must be >= 1");
}

inline void check_probability(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0))
    throw std::invalid_argument(std::string("SbmSpec: ") + name + " outside [0,1]");
}

}  // namespace detail

// Vertices [0, n1) form C1 and [n1, n1+n2) form C2; the planted pair is
// returned alongside the graph.
inline std::pair<WeightedGraph, ClusterPair> sbm_undirected(const SbmSpec& spec) {
  detail::check_partitions(spec);
  detail::check_probability(spec.p, "p");
  detail::check_probability(spec.q, "q");
  const VertexId n = spec.n1 + spec.n2;
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      bool cross = (u < spec.n1) != (v < spec.n1);
      double prob = cross ? spec.p : spec.q;
      if (hash_unit(spec.seed, static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v)) < prob)
        edges.push_back({u, v, 1.0});
    }
  }
  std::vector<VertexId> c1(static_cast<std::size_t>(spec.n1)), c2(static_cast<std::size_t>(spec.n2));
  for (VertexId i = 0; i < spec.n1; ++i) c1[static_cast<std::size_t>(i)] = i;
  for (VertexId i = 0; i < spec.n2; ++i) c2[static_cast<std::size_t>(i)] = spec.n1 + i;
  return {WeightedGraph(n, std::move(edges)), ClusterPair(std::move(c1), std::move(c2))};
}

// Vertices [0, n1) form L and [n1, n1+n2) form R.
inline std::pair<WeightedDigraph, ClusterPair> sbm_directed(const SbmSpec& spec) {
  detail::check_partitions(spec);
  detail::check_probability(spec.eta, "eta");
  const VertexId n = spec.n1 + spec.n2;
  const double intra_l = std::min(9.0 / static_cast<double>(spec.n1), 1.0);
  const double intra_r = std::min(9.0 / static_cast<double>(spec.n2), 1.0);
  std::vector<Arc> arcs;
  for (VertexId u = 0; u < n; ++u) {
    bool u_left = u < spec.n1;
    for (VertexId v = 0; v < n; ++v) {
      if (u == v) continue;
      bool v_left = v < spec.n1;
      double prob;
      if (u_left && v_left)
        prob = intra_l;
      else if (!u_left && !v_left)
        prob = intra_r;
      else if (u_left)
        prob = spec.eta;
      else
        prob = 1.0 - spec.eta;
      if (hash_unit(spec.seed, static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v)) < prob)
        arcs.push_back({u, v, 1.0});
    }
  }
  std::vector<VertexId> l(static_cast<std::size_t>(spec.n1)), r(static_cast<std::size_t>(spec.n2));
  for (VertexId i = 0; i < spec.n1; ++i) l[static_cast<std::size_t>(i)] = i;
  for (VertexId i = 0; i < spec.n2; ++i) r[static_cast<std::size_t>(i)] = spec.n1 + i;
  return {WeightedDigraph(n, std::move(arcs)), ClusterPair(std::move(l), std::move(r))};
}

}  // namespace bipspar
