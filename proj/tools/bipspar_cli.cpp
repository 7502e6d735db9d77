// bipspar command line front end: SBM generation, online sparsification of
// undirected and directed graphs, semi-double cover transforms, spectral
// summaries, a bipartite-like cluster finder, and the experiment harness.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <bipspar/cover.hpp>
#include <bipspar/dsparsify.hpp>
#include <bipspar/edgelist.hpp>
#include <bipspar/experiment.hpp>
#include <bipspar/localbip.hpp>
#include <bipspar/sbm.hpp>
#include <bipspar/sparsify.hpp>
#include <bipspar/spectral.hpp>

using nlohmann::json;
using namespace bipspar;

namespace {

std::vector<VertexId> to_original(const std::vector<VertexId>& compact_ids,
                                  const std::vector<VertexId>& original_ids) {
  std::vector<VertexId> out;
  out.reserve(compact_ids.size());
  for (VertexId v : compact_ids) out.push_back(original_ids[static_cast<std::size_t>(v)]);
  return out;
}

// Witness files give ids in the input file's numbering; map them to compact.
std::vector<ClusterPair> load_witnesses(const std::string& path,
                                        const std::vector<VertexId>& original_ids) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json doc = json::parse(in);
  std::unordered_map<VertexId, VertexId> to_compact;
  for (std::size_t i = 0; i < original_ids.size(); ++i)
    to_compact[original_ids[i]] = static_cast<VertexId>(i);
  auto translate = [&](const json& arr) {
    std::vector<VertexId> ids;
    for (const auto& x : arr) {
      VertexId original = x.get<VertexId>();
      auto it = to_compact.find(original);
      if (it == to_compact.end())
        throw std::runtime_error("witness vertex " + std::to_string(original) +
                                 " not present in the input graph");
      ids.push_back(it->second);
    }
    return ids;
  };
  std::vector<ClusterPair> witnesses;
  if (doc.is_object())
    witnesses.emplace_back(translate(doc.at("A")), translate(doc.at("B")));
  else
    for (const auto& entry : doc)
      witnesses.emplace_back(translate(entry.at("A")), translate(entry.at("B")));
  return witnesses;
}

void write_planted_sidecar(const std::string& path, const ClusterPair& pair) {
  json doc;
  doc["A"] = pair.A;
  doc["B"] = pair.B;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << doc.dump(2) << "\n";
}

int env_thread_cap() {
  const char* raw = std::getenv("BIPSPAR_THREADS");
  if (!raw || !*raw) return -1;  // unset
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 0)
    throw std::runtime_error("BIPSPAR_THREADS must be a non-negative integer");
  return static_cast<int>(v);
}

// BIPSPAR_THREADS caps the worker count; 0 means hardware concurrency.
int apply_thread_cap(int requested) {
  int cap = env_thread_cap();
  if (cap < 0) return requested;
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  int want = requested == 0 ? hw : requested;
  int limit = cap == 0 ? hw : cap;
  return std::min(want, limit);
}

// --- subcommand payloads ---------------------------------------------------

struct SbmArgs {
  std::string kind = "undirected";
  VertexId n1 = 0, n2 = 0;
  double p = -1.0, q = -1.0, eta = -1.0;
  std::uint64_t seed = 0;
  std::string output;
  std::string planted;
};

void run_sbm(const SbmArgs& a) {
  SbmSpec spec;
  spec.n1 = a.n1;
  spec.n2 = a.n2;
  spec.seed = a.seed;
  std::string planted_path = a.planted.empty() ? a.output + ".planted.json" : a.planted;
  if (a.kind == "undirected") {
    if (a.p < 0.0) throw std::runtime_error("sbm: --p is required for --kind undirected");
    spec.p = a.p;
    spec.q = a.q < 0.0 ? 0.1 * a.p : a.q;
    auto [g, pair] = sbm_undirected(spec);
    write_edge_list(a.output, g);
    write_planted_sidecar(planted_path, pair);
    json summary{{"vertices", g.num_vertices()}, {"edges", g.num_edges()}};
    std::cout << summary.dump() << "\n";
  } else {
    if (a.eta < 0.0) throw std::runtime_error("sbm: --eta is required for --kind directed");
    spec.eta = a.eta;
    auto [g, pair] = sbm_directed(spec);
    write_arc_list(a.output, g);
    write_planted_sidecar(planted_path, pair);
    json summary{{"vertices", g.num_vertices()}, {"arcs", g.num_arcs()}};
    std::cout << summary.dump() << "\n";
  }
}

struct SparsifyArgs {
  double alpha = 0.0;
  int auto_k = 0;
  std::uint64_t seed = 0;
  std::string input, output;
};

void run_sparsify(const SparsifyArgs& a) {
  auto r = read_edge_list(a.input);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  SparsifyConfig cfg = a.auto_k > 0 ? auto_alpha_config(r.graph, a.auto_k, a.seed)
                                    : explicit_alpha_config(a.alpha, a.seed);
  WeightedGraph out = sparsify(r.graph, cfg);
  write_edge_list(a.output, out);
  write_id_map(a.output + ".idmap", r.original_ids);
  json summary{{"edges_in", r.graph.num_edges()},
               {"edges_out", out.num_edges()},
               {"alpha", cfg.alpha},
               {"seed", cfg.seed}};
  std::cout << summary.dump() << "\n";
}

struct DsparsifyArgs {
  double alpha = 0.0;
  int auto_k = 0;
  std::uint64_t seed = 0;
  std::string input, output, witness;
};

void run_dsparsify(const DsparsifyArgs& a) {
  auto r = read_arc_list(a.input);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  SparsifyConfig cfg =
      a.auto_k > 0
          ? explicit_alpha_config(directed_auto_alpha(r.graph, a.auto_k), a.seed)
          : explicit_alpha_config(a.alpha, a.seed);
  WeightedDigraph out = sparsify_digraph(r.graph, cfg);
  write_arc_list(a.output, out);
  write_id_map(a.output + ".idmap", r.original_ids);

  std::vector<ClusterPair> witnesses;
  if (!a.witness.empty()) witnesses = load_witnesses(a.witness, r.original_ids);
  DirectedSparsifyReport rep = report(r.graph, out, cfg, witnesses);

  json doc{{"input_arcs", rep.input_arcs},
           {"output_arcs", rep.output_arcs},
           {"alpha", rep.alpha},
           {"seed", rep.seed}};
  doc["witnesses"] = json::array();
  for (const auto& w : rep.witnesses) {
    json entry;
    entry["A"] = to_original(w.pair.A, r.original_ids);
    entry["B"] = to_original(w.pair.B, r.original_ids);
    entry["phi_before"] = w.phi_before ? json(*w.phi_before) : json(nullptr);
    entry["phi_after"] = w.phi_after ? json(*w.phi_after) : json(nullptr);
    doc["witnesses"].push_back(std::move(entry));
  }
  std::cout << doc.dump(2) << "\n";
}

struct CoverArgs {
  std::string direction;
  std::string input, output;
};

void run_cover(const CoverArgs& a) {
  if (a.direction == "forward") {
    auto r = read_arc_list(a.input);
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
    CoverGraph h = semi_double_cover(r.graph);
    write_edge_list(a.output, h.graph);
    write_id_map(a.output + ".idmap", r.original_ids);
  } else {
    auto r = read_edge_list(a.input);
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
    WeightedDigraph g = reverse_semi_double_cover(as_cover(r.graph));
    write_arc_list(a.output, g);
    write_id_map(a.output + ".idmap", r.original_ids);
  }
}

struct FindbipArgs {
  std::string input;
  bool directed = false;
  std::uint64_t seed = 0;
  int iters = 500;
  double tol = 1e-7;
};

void run_findbip(const FindbipArgs& a) {
  PowerParams params{a.iters, a.tol, a.seed};
  if (a.directed) {
    auto r = read_arc_list(a.input);
    auto res = find_directed_cluster(r.graph, params);
    json doc{{"A", to_original(res.pair.A, r.original_ids)},
             {"B", to_original(res.pair.B, r.original_ids)},
             {"flow_ratio", res.flow},
             {"iterations", res.iterations},
             {"seconds", res.seconds}};
    std::cout << doc.dump(2) << "\n";
  } else {
    auto r = read_edge_list(a.input);
    auto res = find_bipartite_cluster(r.graph, params);
    json doc{{"L", to_original(res.L, r.original_ids)},
             {"R", to_original(res.R, r.original_ids)},
             {"beta", res.beta},
             {"iterations", res.iterations},
             {"seconds", res.seconds}};
    std::cout << doc.dump(2) << "\n";
  }
}

void run_spectral(const std::string& input) {
  auto r = read_edge_list(input);
  SpectralSummary s = spectral_summary(r.graph);
  json doc{{"laplacian", s.laplacian}, {"signless", s.signless}};
  std::cout << doc.dump(2) << "\n";
}

struct ExperimentArgs {
  std::string config_path;
  std::string kind;
  VertexId n1 = -1, n2 = -1;
  double p = -1.0, q = -1.0, eta = -1.0;
  double alpha = -1.0;
  int repetitions = -1;
  std::optional<std::uint64_t> seed;
  std::string input, output, format;
  int iters = -1;
  double tol = -1.0;
  int threads = -1;
};

ExperimentKind parse_kind(const std::string& name) {
  if (name == "undirected-sbm") return ExperimentKind::UndirectedSbm;
  if (name == "directed-sbm") return ExperimentKind::DirectedSbm;
  if (name == "file-undirected") return ExperimentKind::FileUndirected;
  if (name == "file-directed") return ExperimentKind::FileDirected;
  throw std::runtime_error("experiment: unknown kind '" + name + "'");
}

// Config file first, then flag overrides.
void run_exp(const ExperimentArgs& a) {
  ExperimentConfig cfg;
  std::string format = "csv";
  std::string output;
  std::optional<double> q;  // distinguish "never given" from q = 0
  if (!a.config_path.empty()) {
    std::ifstream in(a.config_path);
    if (!in) throw std::runtime_error("cannot open " + a.config_path);
    json doc = json::parse(in);
    if (doc.contains("kind")) cfg.kind = parse_kind(doc["kind"].get<std::string>());
    if (doc.contains("n1")) cfg.sbm.n1 = doc["n1"].get<VertexId>();
    if (doc.contains("n2")) cfg.sbm.n2 = doc["n2"].get<VertexId>();
    if (doc.contains("p")) cfg.sbm.p = doc["p"].get<double>();
    if (doc.contains("q")) q = doc["q"].get<double>();
    if (doc.contains("eta")) cfg.sbm.eta = doc["eta"].get<double>();
    if (doc.contains("alpha")) cfg.alpha = doc["alpha"].get<double>();
    if (doc.contains("repetitions")) cfg.repetitions = doc["repetitions"].get<int>();
    if (doc.contains("seed")) cfg.master_seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("input")) cfg.input_path = doc["input"].get<std::string>();
    if (doc.contains("iters")) cfg.finder.iters = doc["iters"].get<int>();
    if (doc.contains("tol")) cfg.finder.tol = doc["tol"].get<double>();
    if (doc.contains("threads")) cfg.threads = doc["threads"].get<int>();
    if (doc.contains("output")) output = doc["output"].get<std::string>();
    if (doc.contains("format")) format = doc["format"].get<std::string>();
  }
  if (!a.kind.empty()) cfg.kind = parse_kind(a.kind);
  if (a.n1 >= 0) cfg.sbm.n1 = a.n1;
  if (a.n2 >= 0) cfg.sbm.n2 = a.n2;
  if (a.p >= 0.0) cfg.sbm.p = a.p;
  if (a.q >= 0.0) q = a.q;
  if (a.eta >= 0.0) cfg.sbm.eta = a.eta;
  if (a.alpha >= 0.0) cfg.alpha = a.alpha;
  if (a.repetitions > 0) cfg.repetitions = a.repetitions;
  if (a.seed) cfg.master_seed = *a.seed;
  if (!a.input.empty()) cfg.input_path = a.input;
  if (a.iters > 0) cfg.finder.iters = a.iters;
  if (a.tol > 0.0) cfg.finder.tol = a.tol;
  if (a.threads >= 0) cfg.threads = a.threads;
  if (!a.output.empty()) output = a.output;
  if (!a.format.empty()) format = a.format;

  cfg.sbm.q = q ? *q : 0.1 * cfg.sbm.p;
  if (output.empty()) throw std::runtime_error("experiment: --output is required");
  EmitFormat fmt;
  if (format == "csv")
    fmt = EmitFormat::Csv;
  else if (format == "json")
    fmt = EmitFormat::Json;
  else
    throw std::runtime_error("experiment: unknown format '" + format + "'");

  cfg.threads = apply_thread_cap(cfg.threads);
  auto rows = run_experiment(cfg);
  emit(rows, fmt, output);
  json summary{{"rows", rows.size()}, {"output", output}};
  std::cout << summary.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"online sparsification of bipartite-like clusters in graphs"};
  app.require_subcommand(1);

  SbmArgs sbm_args;
  auto* sbm_cmd = app.add_subcommand("sbm", "generate a two-block stochastic block model graph");
  sbm_cmd->add_option("--kind", sbm_args.kind, "undirected | directed")
      ->check(CLI::IsMember({"undirected", "directed"}));
  sbm_cmd->add_option("--n1", sbm_args.n1, "vertices in the first block")->required();
  sbm_cmd->add_option("--n2", sbm_args.n2, "vertices in the second block")->required();
  sbm_cmd->add_option("--p", sbm_args.p, "cross-block edge probability (undirected)");
  sbm_cmd->add_option("--q", sbm_args.q, "intra-block edge probability (default 0.1 p)");
  sbm_cmd->add_option("--eta", sbm_args.eta, "L-to-R arc probability (directed)");
  sbm_cmd->add_option("--seed", sbm_args.seed, "generator seed");
  sbm_cmd->add_option("--output", sbm_args.output, "edge list output path")->required();
  sbm_cmd->add_option("--planted", sbm_args.planted,
                      "planted pair sidecar path (default <output>.planted.json)");
  sbm_cmd->callback([&] { run_sbm(sbm_args); });

  SparsifyArgs sp_args;
  auto* sp_cmd = app.add_subcommand("sparsify", "sparsify an undirected graph");
  auto* sp_alpha = sp_cmd->add_option("--alpha", sp_args.alpha, "oversampling factor");
  sp_cmd->add_option("--auto-k", sp_args.auto_k,
                     "compute alpha from the spectrum for k clusters (small graphs)")
      ->excludes(sp_alpha);
  sp_cmd->add_option("--seed", sp_args.seed, "sampling seed");
  sp_cmd->add_option("--input", sp_args.input, "edge list input")->required();
  sp_cmd->add_option("--output", sp_args.output, "edge list output")->required();
  sp_cmd->callback([&] {
    if (sp_args.alpha <= 0.0 && sp_args.auto_k <= 0)
      throw std::runtime_error("sparsify: pass --alpha or --auto-k");
    run_sparsify(sp_args);
  });

  DsparsifyArgs dsp_args;
  auto* dsp_cmd = app.add_subcommand("dsparsify", "sparsify a directed graph");
  auto* dsp_alpha = dsp_cmd->add_option("--alpha", dsp_args.alpha, "oversampling factor");
  dsp_cmd->add_option("--auto-k", dsp_args.auto_k,
                      "compute alpha from the cover spectrum for k clusters (small graphs)")
      ->excludes(dsp_alpha);
  dsp_cmd->add_option("--seed", dsp_args.seed, "sampling seed");
  dsp_cmd->add_option("--input", dsp_args.input, "arc list input")->required();
  dsp_cmd->add_option("--output", dsp_args.output, "arc list output")->required();
  dsp_cmd->add_option("--witness", dsp_args.witness,
                      "JSON file of cluster pairs to evaluate before/after");
  dsp_cmd->callback([&] {
    if (dsp_args.alpha <= 0.0 && dsp_args.auto_k <= 0)
      throw std::runtime_error("dsparsify: pass --alpha or --auto-k");
    run_dsparsify(dsp_args);
  });

  CoverArgs cov_args;
  auto* cov_cmd = app.add_subcommand("cover", "semi-double cover transforms");
  cov_cmd->add_option("--direction", cov_args.direction, "forward | reverse")
      ->required()
      ->check(CLI::IsMember({"forward", "reverse"}));
  cov_cmd->add_option("--input", cov_args.input, "input graph")->required();
  cov_cmd->add_option("--output", cov_args.output, "output graph")->required();
  cov_cmd->callback([&] { run_cover(cov_args); });

  FindbipArgs fb_args;
  auto* fb_cmd = app.add_subcommand("findbip", "find a bipartite-like cluster");
  fb_cmd->add_option("--input", fb_args.input, "edge list input")->required();
  fb_cmd->add_flag("--directed", fb_args.directed, "treat the input as a digraph");
  fb_cmd->add_option("--seed", fb_args.seed, "start vector seed");
  fb_cmd->add_option("--iters", fb_args.iters, "power iteration cap");
  fb_cmd->add_option("--tol", fb_args.tol, "Rayleigh quotient convergence tolerance");
  fb_cmd->callback([&] { run_findbip(fb_args); });

  std::string spectral_input;
  auto* spec_cmd = app.add_subcommand("spectral", "eigenvalues of the normalized matrices");
  spec_cmd->add_option("--input", spectral_input, "edge list input")->required();
  spec_cmd->callback([&] { run_spectral(spectral_input); });

  ExperimentArgs exp_args;
  auto* exp_cmd = app.add_subcommand("experiment", "full vs sparsified finder comparison");
  exp_cmd->add_option("--config", exp_args.config_path, "JSON config file (flags override it)");
  exp_cmd->add_option("--kind", exp_args.kind,
                      "undirected-sbm | directed-sbm | file-undirected | file-directed");
  exp_cmd->add_option("--n1", exp_args.n1, "vertices in the first block");
  exp_cmd->add_option("--n2", exp_args.n2, "vertices in the second block");
  exp_cmd->add_option("--p", exp_args.p, "cross-block probability");
  exp_cmd->add_option("--q", exp_args.q, "intra-block probability (default 0.1 p)");
  exp_cmd->add_option("--eta", exp_args.eta, "L-to-R arc probability");
  exp_cmd->add_option("--alpha", exp_args.alpha, "oversampling factor (0 = default)");
  exp_cmd->add_option("--repetitions", exp_args.repetitions, "repetitions per variant");
  exp_cmd
      ->add_option_function<std::uint64_t>(
          "--seed", [&](std::uint64_t s) { exp_args.seed = s; }, "master seed")
      ->type_name("UINT");
  exp_cmd->add_option("--input", exp_args.input, "edge list for the file kinds");
  exp_cmd->add_option("--output", exp_args.output, "rows output path");
  exp_cmd->add_option("--format", exp_args.format, "csv | json");
  exp_cmd->add_option("--iters", exp_args.iters, "power iteration cap");
  exp_cmd->add_option("--tol", exp_args.tol, "convergence tolerance");
  exp_cmd->add_option("--threads", exp_args.threads, "worker count (0 = auto)");
  exp_cmd->callback([&] { run_exp(exp_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    return app.exit(e);  // --help and friends
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
