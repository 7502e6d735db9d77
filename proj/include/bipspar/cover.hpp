#pragma once

#include <span>
#include <vector>

#include "graph.hpp"

namespace bipspar {

// Fixed id convention for the semi-double cover of a digraph on n vertices:
// vertex v maps to tail copy 2v and head copy 2v+1, so covers serialize
// deterministically. Every cover edge joins a tail copy to a head copy.

inline constexpr VertexId tail_copy(VertexId v) { return 2 * v; }
inline constexpr VertexId head_copy(VertexId v) { return 2 * v + 1; }
inline constexpr bool is_tail_copy(VertexId cover_id) { return cover_id % 2 == 0; }
inline constexpr VertexId cover_to_source(VertexId cover_id) { return cover_id / 2; }

struct CoverGraph {
  WeightedGraph graph;       // on 2 * source_vertices vertices
  VertexId source_vertices;  // vertex count of the digraph this covers
};

// Wraps an undirected graph as a cover, validating the id convention.
inline CoverGraph as_cover(WeightedGraph g) {
  if (g.num_vertices() % 2 != 0)
    throw std::invalid_argument("malformed cover: odd vertex count " +
                                std::to_string(g.num_vertices()));
  for (const Edge& e : g.edges())
    if (is_tail_copy(e.u) == is_tail_copy(e.v))
      throw std::invalid_argument("malformed cover: edge {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "} joins two " +
                                  (is_tail_copy(e.u) ? "tail" : "head") + " copies");
  VertexId source = g.num_vertices() / 2;
  return {std::move(g), source};
}

// Every arc (u, v, w) becomes the edge {u1, v2, w}.
inline CoverGraph semi_double_cover(const WeightedDigraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.num_arcs());
  for (const Arc& a : g.arcs()) edges.push_back({tail_copy(a.tail), head_copy(a.head), a.w});
  return {WeightedGraph(2 * g.num_vertices(), std::move(edges)), g.num_vertices()};
}

// Inverse construction: edge {u1, v2, w} becomes the arc (u, v, w).
// reverse_semi_double_cover(semi_double_cover(g)) == g exactly.
inline WeightedDigraph reverse_semi_double_cover(const CoverGraph& h) {
  if (h.graph.num_vertices() != 2 * h.source_vertices)
    throw std::invalid_argument("malformed cover: vertex count mismatch");
  std::vector<Arc> arcs;
  arcs.reserve(h.graph.num_edges());
  for (const Edge& e : h.graph.edges()) {
    if (is_tail_copy(e.u) == is_tail_copy(e.v))
      throw std::invalid_argument("malformed cover: edge {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "} joins two " +
                                  (is_tail_copy(e.u) ? "tail" : "head") + " copies");
    VertexId tail = is_tail_copy(e.u) ? e.u : e.v;
    VertexId head = is_tail_copy(e.u) ? e.v : e.u;
    arcs.push_back({cover_to_source(tail), cover_to_source(head), e.w});
  }
  return WeightedDigraph(h.source_vertices, std::move(arcs));
}

// S = {a1 : a in A} ∪ {b2 : b in B}; simple by construction.
inline std::vector<VertexId> pair_to_set(const ClusterPair& p) {
  std::vector<VertexId> s;
  s.reserve(p.A.size() + p.B.size());
  for (VertexId a : p.A) s.push_back(tail_copy(a));
  for (VertexId b : p.B) s.push_back(head_copy(b));
  std::sort(s.begin(), s.end());
  return s;
}

// Resolution rule for sets containing both copies of a vertex.
enum class SimplificationPolicy {
  DropLighterDegree,  // drop the copy with smaller cover degree, tie keeps the tail copy
  KeepTail,
  KeepHead,
};

// Maps a cover vertex set back to a cluster pair: A from tail copies, B from
// head copies. Non-simple sets are first reduced to one copy per vertex
// according to the policy; the reduction never grows the set.
inline ClusterPair set_to_pair(const CoverGraph& h, std::span<const VertexId> s,
                               SimplificationPolicy policy = SimplificationPolicy::DropLighterDegree) {
  if (s.empty()) throw std::invalid_argument("set_to_pair: empty set");
  VertexId n2 = h.graph.num_vertices();
  std::vector<char> in(static_cast<std::size_t>(n2), 0);
  for (VertexId v : s) {
    detail::check_vertex(v, n2, "set_to_pair");
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<VertexId> a, b;
  for (VertexId v = 0; v < h.source_vertices; ++v) {
    bool has_tail = in[static_cast<std::size_t>(tail_copy(v))];
    bool has_head = in[static_cast<std::size_t>(head_copy(v))];
    if (has_tail && has_head) {
      switch (policy) {
        case SimplificationPolicy::DropLighterDegree:
          if (h.graph.degree(head_copy(v)) > h.graph.degree(tail_copy(v)))
            has_tail = false;
          else
            has_head = false;
          break;
        case SimplificationPolicy::KeepTail:
          has_head = false;
          break;
        case SimplificationPolicy::KeepHead:
          has_tail = false;
          break;
      }
    }
    if (has_tail) a.push_back(v);
    if (has_head) b.push_back(v);
  }
  return ClusterPair(std::move(a), std::move(b));
}

}  // namespace bipspar
