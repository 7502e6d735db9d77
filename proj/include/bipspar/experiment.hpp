#pragma once

#include <atomic>
#include <cstdio>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "dsparsify.hpp"
#include "edgelist.hpp"
#include "localbip.hpp"
#include "sbm.hpp"
#include "sparsify.hpp"

namespace bipspar {

enum class ExperimentKind { UndirectedSbm, DirectedSbm, FileUndirected, FileDirected };
enum class EmitFormat { Csv, Json };

// One experiment = repetitions × {finder on the full graph, finder on its
// sparsified version}. Everything except the wall-clock columns is a pure
// function of the master seed; per-repetition seeds are derived by counter.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::UndirectedSbm;
  SbmSpec sbm;             // used by the SBM kinds (its seed field is ignored)
  std::string input_path;  // used by the file kinds
  double alpha = 0.0;      // 0 = default oversampling for the graph at hand
  int repetitions = 1;
  std::uint64_t master_seed = 0;
  PowerParams finder;  // finder.seed is ignored, derived per repetition
  int threads = 1;     // 0 = hardware concurrency
};

struct ExperimentRow {
  std::uint64_t seed = 0;
  std::string variant;      // "full" | "sparsified"
  double runtime_s = 0.0;   // finder call only
  double quality = 0.0;     // beta (undirected) or flow ratio (directed), on the input graph
  std::size_t edges_in = 0;
  std::size_t edges_out = 0;
};

namespace detail {

inline constexpr std::uint64_t kGenRole = 1, kSparRole = 2, kFinderRole = 3;

inline ClusterPair sweep_pair(const SweepResult& s) { return ClusterPair(s.L, s.R); }

template <class Fn>
inline void run_indexed(int count, int threads, Fn&& fn) {
  if (threads == 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

inline std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
  if (cfg.repetitions < 1)
    throw std::invalid_argument("ExperimentConfig: repetitions must be >= 1");

  const bool directed =
      cfg.kind == ExperimentKind::DirectedSbm || cfg.kind == ExperimentKind::FileDirected;
  const bool from_file =
      cfg.kind == ExperimentKind::FileUndirected || cfg.kind == ExperimentKind::FileDirected;

  WeightedGraph file_graph;
  WeightedDigraph file_digraph;
  if (from_file) {
    if (directed)
      file_digraph = read_arc_list(cfg.input_path).graph;
    else
      file_graph = read_edge_list(cfg.input_path).graph;
  }

  std::vector<ExperimentRow> rows(static_cast<std::size_t>(2 * cfg.repetitions));
  detail::run_indexed(cfg.repetitions, cfg.threads, [&](int r) {
    std::uint64_t seed_r = cfg.master_seed + static_cast<std::uint64_t>(r);
    std::uint64_t gen_seed = hash3(seed_r, detail::kGenRole, 0);
    std::uint64_t spar_seed = hash3(seed_r, detail::kSparRole, 0);
    PowerParams finder = cfg.finder;
    finder.seed = hash3(seed_r, detail::kFinderRole, 0);

    ExperimentRow full, sparse;
    full.seed = sparse.seed = seed_r;
    full.variant = "full";
    sparse.variant = "sparsified";

    if (!directed) {
      WeightedGraph g;
      if (from_file) {
        g = file_graph;
      } else {
        SbmSpec spec = cfg.sbm;
        spec.seed = gen_seed;
        g = sbm_undirected(spec).first;
      }
      double alpha = cfg.alpha > 0.0 ? cfg.alpha : default_alpha(g.num_vertices());

      SweepResult on_full = find_bipartite_cluster(g, finder);
      full.runtime_s = on_full.seconds;
      full.quality = beta_ratio(g, detail::sweep_pair(on_full));
      full.edges_in = full.edges_out = g.num_edges();

      WeightedGraph g_star = sparsify(g, explicit_alpha_config(alpha, spar_seed));
      SweepResult on_sparse = find_bipartite_cluster(g_star, finder);
      sparse.runtime_s = on_sparse.seconds;
      sparse.quality = beta_ratio(g, detail::sweep_pair(on_sparse));
      sparse.edges_in = g.num_edges();
      sparse.edges_out = g_star.num_edges();
    } else {
      WeightedDigraph g;
      if (from_file) {
        g = file_digraph;
      } else {
        SbmSpec spec = cfg.sbm;
        spec.seed = gen_seed;
        g = sbm_directed(spec).first;
      }
      double alpha = cfg.alpha > 0.0 ? cfg.alpha : default_directed_alpha(g.num_vertices());

      DirectedClusterResult on_full = find_directed_cluster(g, finder);
      full.runtime_s = on_full.seconds;
      full.quality = on_full.flow;
      full.edges_in = full.edges_out = g.num_arcs();

      WeightedDigraph g_star = sparsify_digraph(g, explicit_alpha_config(alpha, spar_seed));
      DirectedClusterResult on_sparse = find_directed_cluster(g_star, finder);
      sparse.runtime_s = on_sparse.seconds;
      sparse.quality = flow_ratio(g, on_sparse.pair);
      sparse.edges_in = g.num_arcs();
      sparse.edges_out = g_star.num_arcs();
    }

    rows[static_cast<std::size_t>(2 * r)] = std::move(full);
    rows[static_cast<std::size_t>(2 * r) + 1] = std::move(sparse);
  });

  std::sort(rows.begin(), rows.end(), [](const ExperimentRow& a, const ExperimentRow& b) {
    return a.seed != b.seed ? a.seed < b.seed : a.variant < b.variant;
  });
  return rows;
}

inline void emit(std::span<const ExperimentRow> rows, EmitFormat format, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("emit: no rows");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  char a[40], b[40];
  if (format == EmitFormat::Csv) {
    out << "seed,variant,runtime_s,quality,edges_in,edges_out\n";
    for (const ExperimentRow& r : rows) {
      std::snprintf(a, sizeof a, "%.17g", r.runtime_s);
      std::snprintf(b, sizeof b, "%.17g", r.quality);
      out << r.seed << ',' << r.variant << ',' << a << ',' << b << ',' << r.edges_in << ','
          << r.edges_out << "\n";
    }
  } else {
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const ExperimentRow& r = rows[i];
      std::snprintf(a, sizeof a, "%.17g", r.runtime_s);
      std::snprintf(b, sizeof b, "%.17g", r.quality);
      out << "  {\"seed\": " << r.seed << ", \"variant\": \"" << r.variant
          << "\", \"runtime_s\": " << a << ", \"quality\": " << b
          << ", \"edges_in\": " << r.edges_in << ", \"edges_out\": " << r.edges_out << "}"
          << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    out << "]\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace bipspar
