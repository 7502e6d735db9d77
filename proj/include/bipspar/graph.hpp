#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bipspar {

using VertexId = std::int64_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double w = 0.0;
};

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  double w = 0.0;
};

namespace detail {

inline void check_vertex(VertexId v, VertexId n, const char* what) {
  if (v < 0 || v >= n)
    throw std::out_of_range(std::string(what) + ": vertex id " + std::to_string(v) +
                            " outside [0," + std::to_string(n) + ")");
}

// Membership flags for a vertex set given as an id list. Duplicate ids are
// tolerated; out-of-range ids throw.
inline std::vector<char> membership(std::span<const VertexId> s, VertexId n, const char* what) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (VertexId v : s) {
    check_vertex(v, n, what);
    in[static_cast<std::size_t>(v)] = 1;
  }
  return in;
}

}  // namespace detail

// Undirected weighted graph. Immutable after construction: edges are
// canonicalised (u < v), duplicates merged by weight summation, self-loops and
// non-positive weights rejected. Isolated vertices are allowed.
class WeightedGraph {
 public:
  struct Neighbor {
    VertexId v;
    double w;
  };

  WeightedGraph() = default;

  WeightedGraph(VertexId n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("WeightedGraph: negative vertex count");
    for (auto& e : edges) {
      detail::check_vertex(e.u, n, "WeightedGraph");
      detail::check_vertex(e.v, n, "WeightedGraph");
      if (e.u == e.v)
        throw std::invalid_argument("WeightedGraph: self-loop at vertex " + std::to_string(e.u));
      if (!(e.w > 0.0))
        throw std::invalid_argument("WeightedGraph: non-positive weight on edge {" +
                                    std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
      if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v)
        edges_.back().w += e.w;  // merge parallel edges
      else
        edges_.push_back(e);
    }
    build_index();
  }

  VertexId num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  double degree(VertexId u) const {
    detail::check_vertex(u, n_, "degree");
    return degrees_[static_cast<std::size_t>(u)];
  }
  const std::vector<double>& degrees() const { return degrees_; }

  // Sum of all edge weights (half the total volume).
  double total_weight() const { return total_weight_; }

  std::span<const Neighbor> neighbors(VertexId u) const {
    detail::check_vertex(u, n_, "neighbors");
    auto a = static_cast<std::size_t>(u);
    return {adj_.data() + adj_offsets_[a], adj_offsets_[a + 1] - adj_offsets_[a]};
  }

 private:
  void build_index() {
    degrees_.assign(static_cast<std::size_t>(n_), 0.0);
    adj_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const Edge& e : edges_) {
      degrees_[static_cast<std::size_t>(e.u)] += e.w;
      degrees_[static_cast<std::size_t>(e.v)] += e.w;
      total_weight_ += e.w;
      ++adj_offsets_[static_cast<std::size_t>(e.u) + 1];
      ++adj_offsets_[static_cast<std::size_t>(e.v) + 1];
    }
    for (std::size_t i = 1; i < adj_offsets_.size(); ++i) adj_offsets_[i] += adj_offsets_[i - 1];
    adj_.resize(2 * edges_.size());
    std::vector<std::size_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (const Edge& e : edges_) {
      adj_[cursor[static_cast<std::size_t>(e.u)]++] = {e.v, e.w};
      adj_[cursor[static_cast<std::size_t>(e.v)]++] = {e.u, e.w};
    }
  }

  VertexId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> degrees_;
  double total_weight_ = 0.0;
  std::vector<Neighbor> adj_;
  std::vector<std::size_t> adj_offsets_;
};

// Directed weighted graph with the same normalisation rules: duplicate arcs
// merged by summing, self-loops and non-positive weights rejected.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  WeightedDigraph(VertexId n, std::vector<Arc> arcs) : n_(n) {
    if (n < 0) throw std::invalid_argument("WeightedDigraph: negative vertex count");
    for (const Arc& a : arcs) {
      detail::check_vertex(a.tail, n, "WeightedDigraph");
      detail::check_vertex(a.head, n, "WeightedDigraph");
      if (a.tail == a.head)
        throw std::invalid_argument("WeightedDigraph: self-loop at vertex " +
                                    std::to_string(a.tail));
      if (!(a.w > 0.0))
        throw std::invalid_argument("WeightedDigraph: non-positive weight on arc (" +
                                    std::to_string(a.tail) + "," + std::to_string(a.head) + ")");
    }
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
      return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
    });
    arcs_.reserve(arcs.size());
    for (const Arc& a : arcs) {
      if (!arcs_.empty() && arcs_.back().tail == a.tail && arcs_.back().head == a.head)
        arcs_.back().w += a.w;
      else
        arcs_.push_back(a);
    }
    out_degrees_.assign(static_cast<std::size_t>(n_), 0.0);
    in_degrees_.assign(static_cast<std::size_t>(n_), 0.0);
    for (const Arc& a : arcs_) {
      out_degrees_[static_cast<std::size_t>(a.tail)] += a.w;
      in_degrees_[static_cast<std::size_t>(a.head)] += a.w;
      total_weight_ += a.w;
    }
  }

  VertexId num_vertices() const { return n_; }
  std::size_t num_arcs() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  double out_degree(VertexId u) const {
    detail::check_vertex(u, n_, "out_degree");
    return out_degrees_[static_cast<std::size_t>(u)];
  }
  double in_degree(VertexId u) const {
    detail::check_vertex(u, n_, "in_degree");
    return in_degrees_[static_cast<std::size_t>(u)];
  }
  const std::vector<double>& out_degrees() const { return out_degrees_; }
  const std::vector<double>& in_degrees() const { return in_degrees_; }
  double total_weight() const { return total_weight_; }

 private:
  VertexId n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<double> out_degrees_;
  std::vector<double> in_degrees_;
  double total_weight_ = 0.0;
};

// A disjoint pair (A, B) of vertex sets with A ∪ B non-empty. One side may be
// empty. Ids are stored sorted and deduplicated.
struct ClusterPair {
  std::vector<VertexId> A;
  std::vector<VertexId> B;

  ClusterPair(std::vector<VertexId> a, std::vector<VertexId> b)
      : A(std::move(a)), B(std::move(b)) {
    normalize(A);
    normalize(B);
    if (A.empty() && B.empty()) throw std::invalid_argument("ClusterPair: A and B both empty");
    std::size_t i = 0, j = 0;
    while (i < A.size() && j < B.size()) {
      if (A[i] == B[j])
        throw std::invalid_argument("ClusterPair: vertex " + std::to_string(A[i]) +
                                    " in both A and B");
      (A[i] < B[j] ? i : j)++;
    }
  }

 private:
  static void normalize(std::vector<VertexId>& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
};

// --- undirected quantities -------------------------------------------------

// w(A, B): total weight of edges with one endpoint in A and the other in B.
inline double cut_weight(const WeightedGraph& g, std::span<const VertexId> a,
                         std::span<const VertexId> b) {
  auto in_a = detail::membership(a, g.num_vertices(), "cut_weight");
  auto in_b = detail::membership(b, g.num_vertices(), "cut_weight");
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (in_a[static_cast<std::size_t>(v)] && in_b[static_cast<std::size_t>(v)])
      throw std::invalid_argument("cut_weight: sets overlap at vertex " + std::to_string(v));
  double cut = 0.0;
  for (const Edge& e : g.edges()) {
    auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    if ((in_a[u] && in_b[v]) || (in_a[v] && in_b[u])) cut += e.w;
  }
  return cut;
}

inline double cut_weight(const WeightedGraph& g, const ClusterPair& p) {
  return cut_weight(g, p.A, p.B);
}

// vol(S) = sum of degrees over S.
inline double volume(const WeightedGraph& g, std::span<const VertexId> s) {
  auto in = detail::membership(s, g.num_vertices(), "volume");
  double vol = 0.0;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (in[static_cast<std::size_t>(v)]) vol += g.degree(v);
  return vol;
}

// phi(S) = w(S, V \ S) / vol(S).
inline double conductance(const WeightedGraph& g, std::span<const VertexId> s) {
  if (s.empty()) throw std::domain_error("conductance: undefined for empty set");
  auto in = detail::membership(s, g.num_vertices(), "conductance");
  double vol = 0.0;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (in[static_cast<std::size_t>(v)]) vol += g.degree(v);
  if (vol <= 0.0) throw std::domain_error("conductance: undefined, vol(S) = 0");
  double internal = 0.0;
  for (const Edge& e : g.edges())
    if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)]) internal += e.w;
  return std::clamp((vol - 2.0 * internal) / vol, 0.0, 1.0);
}

// phibar(A, B) = 2 w(A, B) / vol(A ∪ B). Near 1 means (A, B) is a strong
// bipartite-like cluster.
inline double bipartiteness(const WeightedGraph& g, const ClusterPair& p) {
  double vol = volume(g, p.A) + volume(g, p.B);
  if (vol <= 0.0) throw std::domain_error("bipartiteness: undefined, vol(A ∪ B) = 0");
  return std::clamp(2.0 * cut_weight(g, p.A, p.B) / vol, 0.0, 1.0);
}

// beta(L, R) = 1 - phibar(L, R). Near 0 means nearly bipartite.
inline double beta_ratio(const WeightedGraph& g, const ClusterPair& p) {
  return 1.0 - bipartiteness(g, p);
}

// --- directed quantities ---------------------------------------------------

// w(A, B): total weight of arcs from A to B.
inline double cut_weight(const WeightedDigraph& g, std::span<const VertexId> a,
                         std::span<const VertexId> b) {
  auto in_a = detail::membership(a, g.num_vertices(), "cut_weight");
  auto in_b = detail::membership(b, g.num_vertices(), "cut_weight");
  double cut = 0.0;
  for (const Arc& e : g.arcs())
    if (in_a[static_cast<std::size_t>(e.tail)] && in_b[static_cast<std::size_t>(e.head)])
      cut += e.w;
  return cut;
}

inline double vol_out(const WeightedDigraph& g, std::span<const VertexId> s) {
  auto in = detail::membership(s, g.num_vertices(), "vol_out");
  double vol = 0.0;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (in[static_cast<std::size_t>(v)]) vol += g.out_degree(v);
  return vol;
}

inline double vol_in(const WeightedDigraph& g, std::span<const VertexId> s) {
  auto in = detail::membership(s, g.num_vertices(), "vol_in");
  double vol = 0.0;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (in[static_cast<std::size_t>(v)]) vol += g.in_degree(v);
  return vol;
}

// phibar(A, B) = 2 w(A, B) / (vol_out(A) + vol_in(B)).
inline double directed_bipartiteness(const WeightedDigraph& g, const ClusterPair& p) {
  double denom = vol_out(g, p.A) + vol_in(g, p.B);
  if (denom <= 0.0)
    throw std::domain_error("directed_bipartiteness: undefined, vol_out(A) + vol_in(B) = 0");
  return std::clamp(2.0 * cut_weight(g, p.A, p.B) / denom, 0.0, 1.0);
}

// f(A, B) = 1 - phibar(A, B).
inline double flow_ratio(const WeightedDigraph& g, const ClusterPair& p) {
  return 1.0 - directed_bipartiteness(g, p);
}

}  // namespace bipspar
