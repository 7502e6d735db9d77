#pragma once

#include <vector>

#include "cover.hpp"
#include "graph.hpp"

// Exhaustive enumerators for the k-way dual Cheeger constants. These are
// ground-truth oracles: they trade scale for exactness and refuse inputs
// beyond small vertex counts.
//
// A family (A_1,B_1),...,(A_k,B_k) is valid when all 2k sets are pairwise
// disjoint and every A_i ∪ B_i is non-empty; pairs whose volume term is zero
// cannot be evaluated and such families are skipped.

namespace bipspar {

struct DualCheegerResult {
  double rho = 0.0;
  std::vector<ClusterPair> witnesses;
};

namespace detail {

// assignment labels: 0 = unused, 1..k = A_i, k+1..2k = B_i
inline std::vector<ClusterPair> pairs_from_labels(const std::vector<int>& labels, int k) {
  std::vector<std::vector<VertexId>> a(static_cast<std::size_t>(k)), b(static_cast<std::size_t>(k));
  for (std::size_t v = 0; v < labels.size(); ++v) {
    int l = labels[v];
    if (l == 0) continue;
    if (l <= k)
      a[static_cast<std::size_t>(l - 1)].push_back(static_cast<VertexId>(v));
    else
      b[static_cast<std::size_t>(l - k - 1)].push_back(static_cast<VertexId>(v));
  }
  std::vector<ClusterPair> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.emplace_back(std::move(a[i]), std::move(b[i]));
  return out;
}

}  // namespace detail

// Exact rho-bar_G(k) with one optimal witness family. n <= 12.
inline DualCheegerResult dual_cheeger_bruteforce(const WeightedGraph& g, int k) {
  const VertexId n = g.num_vertices();
  if (n > 12) throw std::invalid_argument("dual_cheeger_bruteforce: n > 12");
  if (k < 1) throw std::invalid_argument("dual_cheeger_bruteforce: k < 1");

  struct Search {
    const WeightedGraph& g;
    int k;
    VertexId n;
    std::vector<int> labels;
    std::vector<double> cut, vol;
    std::vector<int> count;
    double best = -1.0;
    std::vector<int> best_labels;

    void run(VertexId v) {
      if (v == n) {
        double value = 2.0;
        for (int i = 0; i < k; ++i) {
          if (count[i] == 0 || vol[i] <= 0.0) return;
          value = std::min(value, 2.0 * cut[i] / vol[i]);
        }
        if (value > best) {
          best = value;
          best_labels = labels;
        }
        return;
      }
      for (int l = 0; l <= 2 * k; ++l) {
        labels[static_cast<std::size_t>(v)] = l;
        if (l == 0) {
          run(v + 1);
          continue;
        }
        int i = (l <= k) ? l - 1 : l - k - 1;
        int opposite = (l <= k) ? l + k : l - k;
        double added_cut = 0.0;
        for (const auto& nb : g.neighbors(v))
          if (nb.v < v && labels[static_cast<std::size_t>(nb.v)] == opposite) added_cut += nb.w;
        cut[i] += added_cut;
        vol[i] += g.degree(v);
        ++count[i];
        run(v + 1);
        cut[i] -= added_cut;
        vol[i] -= g.degree(v);
        --count[i];
      }
      labels[static_cast<std::size_t>(v)] = 0;
    }
  };

  Search s{g, k, n, std::vector<int>(static_cast<std::size_t>(n), 0),
           std::vector<double>(static_cast<std::size_t>(k), 0.0),
           std::vector<double>(static_cast<std::size_t>(k), 0.0),
           std::vector<int>(static_cast<std::size_t>(k), 0)};
  s.run(0);
  if (s.best < 0.0)
    throw std::domain_error("dual_cheeger_bruteforce: no evaluable family of " +
                            std::to_string(k) + " pairs");
  return {s.best, detail::pairs_from_labels(s.best_labels, k)};
}

// Exact directed rho-bar(k) with witnesses. n <= 10.
inline DualCheegerResult directed_dual_cheeger_bruteforce(const WeightedDigraph& g, int k) {
  const VertexId n = g.num_vertices();
  if (n > 10) throw std::invalid_argument("directed_dual_cheeger_bruteforce: n > 10");
  if (k < 1) throw std::invalid_argument("directed_dual_cheeger_bruteforce: k < 1");

  std::vector<std::vector<std::pair<VertexId, double>>> out_nbr(static_cast<std::size_t>(n)),
      in_nbr(static_cast<std::size_t>(n));
  for (const Arc& a : g.arcs()) {
    out_nbr[static_cast<std::size_t>(a.tail)].push_back({a.head, a.w});
    in_nbr[static_cast<std::size_t>(a.head)].push_back({a.tail, a.w});
  }

  struct Search {
    const WeightedDigraph& g;
    const std::vector<std::vector<std::pair<VertexId, double>>>& out_nbr;
    const std::vector<std::vector<std::pair<VertexId, double>>>& in_nbr;
    int k;
    VertexId n;
    std::vector<int> labels;
    std::vector<double> cut, vol;
    std::vector<int> count;
    double best = -1.0;
    std::vector<int> best_labels;

    void run(VertexId v) {
      if (v == n) {
        double value = 2.0;
        for (int i = 0; i < k; ++i) {
          if (count[i] == 0 || vol[i] <= 0.0) return;
          value = std::min(value, 2.0 * cut[i] / vol[i]);
        }
        if (value > best) {
          best = value;
          best_labels = labels;
        }
        return;
      }
      for (int l = 0; l <= 2 * k; ++l) {
        labels[static_cast<std::size_t>(v)] = l;
        if (l == 0) {
          run(v + 1);
          continue;
        }
        bool is_a = l <= k;
        int i = is_a ? l - 1 : l - k - 1;
        // arcs from A_i to B_i with both endpoints assigned
        double added_cut = 0.0;
        if (is_a) {
          for (const auto& [u, w] : out_nbr[static_cast<std::size_t>(v)])
            if (u < v && labels[static_cast<std::size_t>(u)] == i + k + 1) added_cut += w;
        } else {
          for (const auto& [u, w] : in_nbr[static_cast<std::size_t>(v)])
            if (u < v && labels[static_cast<std::size_t>(u)] == i + 1) added_cut += w;
        }
        cut[i] += added_cut;
        vol[i] += is_a ? g.out_degree(v) : g.in_degree(v);
        ++count[i];
        run(v + 1);
        cut[i] -= added_cut;
        vol[i] -= is_a ? g.out_degree(v) : g.in_degree(v);
        --count[i];
      }
      labels[static_cast<std::size_t>(v)] = 0;
    }
  };

  Search s{g,
           out_nbr,
           in_nbr,
           k,
           n,
           std::vector<int>(static_cast<std::size_t>(n), 0),
           std::vector<double>(static_cast<std::size_t>(k), 0.0),
           std::vector<double>(static_cast<std::size_t>(k), 0.0),
           std::vector<int>(static_cast<std::size_t>(k), 0)};
  s.run(0);
  if (s.best < 0.0)
    throw std::domain_error("directed_dual_cheeger_bruteforce: no evaluable family of " +
                            std::to_string(k) + " pairs");
  return {s.best, detail::pairs_from_labels(s.best_labels, k)};
}

struct SimpleFamilyResult {
  double min_max_phi = 0.0;
  std::vector<std::vector<VertexId>> sets;  // witness C_i in cover ids
};

// min over families of k disjoint sets C_1..C_k whose union is simple of
// max_i phi_H(C_i), evaluated entirely on the cover graph. This is the
// right-hand side of the directed reduction identity and is enumerated
// independently of the directed formula above.
inline SimpleFamilyResult simple_family_min_max_conductance(const CoverGraph& h, int k) {
  const VertexId n = h.source_vertices;
  if (n > 10) throw std::invalid_argument("simple_family_min_max_conductance: n > 10");
  if (k < 1) throw std::invalid_argument("simple_family_min_max_conductance: k < 1");

  // label 0 = no copy used; 1..k = tail copy in C_i; k+1..2k = head copy in C_i
  struct Search {
    const WeightedGraph& cover;
    int k;
    VertexId n;
    std::vector<int> labels;
    std::vector<double> internal, vol;
    std::vector<int> count;
    double best = 3.0;
    bool found = false;
    std::vector<int> best_labels;

    void run(VertexId v) {
      if (v == n) {
        double value = 0.0;
        for (int i = 0; i < k; ++i) {
          if (count[i] == 0 || vol[i] <= 0.0) return;
          value = std::max(value, (vol[i] - 2.0 * internal[i]) / vol[i]);
        }
        if (!found || value < best) {
          found = true;
          best = value;
          best_labels = labels;
        }
        return;
      }
      for (int l = 0; l <= 2 * k; ++l) {
        labels[static_cast<std::size_t>(v)] = l;
        if (l == 0) {
          run(v + 1);
          continue;
        }
        bool tail = l <= k;
        int i = tail ? l - 1 : l - k - 1;
        int partner = tail ? l + k : l - k;  // label the other copy class carries in C_i
        VertexId copy = tail ? tail_copy(v) : head_copy(v);
        double added_internal = 0.0;
        for (const auto& nb : cover.neighbors(copy)) {
          VertexId u = cover_to_source(nb.v);
          if (u < v && labels[static_cast<std::size_t>(u)] == partner) added_internal += nb.w;
        }
        internal[i] += added_internal;
        vol[i] += cover.degree(copy);
        ++count[i];
        run(v + 1);
        internal[i] -= added_internal;
        vol[i] -= cover.degree(copy);
        --count[i];
      }
      labels[static_cast<std::size_t>(v)] = 0;
    }
  };

  Search s{h.graph,
           k,
           n,
           std::vector<int>(static_cast<std::size_t>(n), 0),
           std::vector<double>(static_cast<std::size_t>(k), 0.0),
           std::vector<double>(static_cast<std::size_t>(k), 0.0),
           std::vector<int>(static_cast<std::size_t>(k), 0)};
  s.run(0);
  if (!s.found)
    throw std::domain_error("simple_family_min_max_conductance: no evaluable family of " +
                            std::to_string(k) + " sets");
  SimpleFamilyResult res;
  res.min_max_phi = s.best;
  res.sets.assign(static_cast<std::size_t>(k), {});
  for (std::size_t v = 0; v < s.best_labels.size(); ++v) {
    int l = s.best_labels[v];
    if (l == 0) continue;
    bool tail = l <= k;
    int i = tail ? l - 1 : l - k - 1;
    res.sets[static_cast<std::size_t>(i)].push_back(
        tail ? tail_copy(static_cast<VertexId>(v)) : head_copy(static_cast<VertexId>(v)));
  }
  return res;
}

}  // namespace bipspar
