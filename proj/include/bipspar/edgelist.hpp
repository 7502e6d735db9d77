#pragma once

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "graph.hpp"

// Whitespace-separated edge-list text format: one `u v w` line per edge (or
// per arc in directed mode), `#`-prefixed comment lines. Vertex ids are
// non-negative integers and need not be contiguous; readers compact them and
// report the original ids. Writers emit an `# n <N>` comment so isolated
// vertices survive round trips.

namespace bipspar {

namespace detail {

struct ParsedLine {
  VertexId u, v;
  double w;
};

inline std::optional<ParsedLine> parse_edge_line(const std::string& line, const std::string& path,
                                                 std::size_t lineno,
                                                 std::optional<VertexId>& declared_n) {
  const char* s = line.c_str();
  while (*s && std::isspace(static_cast<unsigned char>(*s))) ++s;
  if (*s == '\0') return std::nullopt;
  if (*s == '#') {
    // honor `# n <N>` headers, ignore other comments
    ++s;
    while (*s && std::isspace(static_cast<unsigned char>(*s))) ++s;
    if (*s == 'n' && std::isspace(static_cast<unsigned char>(s[1]))) {
      char* end = nullptr;
      long long n = std::strtoll(s + 1, &end, 10);
      if (end != s + 1 && n >= 0) declared_n = static_cast<VertexId>(n);
    }
    return std::nullopt;
  }
  char* end = nullptr;
  long long u = std::strtoll(s, &end, 10);
  if (end == s)
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": parse error, expected `u v w`");
  s = end;
  long long v = std::strtoll(s, &end, 10);
  if (end == s)
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": parse error, expected `u v w`");
  s = end;
  double w = std::strtod(s, &end);
  if (end == s)
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": parse error, missing weight");
  s = end;
  while (*s && std::isspace(static_cast<unsigned char>(*s))) ++s;
  if (*s != '\0')
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": parse error, trailing tokens");
  if (u < 0 || v < 0)
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": negative vertex id");
  if (w < 0.0)
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": negative weight");
  return ParsedLine{u, v, w};
}

struct RawEdgeList {
  std::vector<ParsedLine> lines;
  VertexId n = 0;
  std::vector<VertexId> original_ids;  // compact id -> original id
  bool compacted = false;
  std::vector<std::string> warnings;
};

inline RawEdgeList read_raw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  RawEdgeList raw;
  std::optional<VertexId> declared_n;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto parsed = parse_edge_line(line, path, lineno, declared_n);
    if (parsed) raw.lines.push_back(*parsed);
  }
  if (raw.lines.empty()) raw.warnings.push_back(path + ": no edges found");

  std::vector<VertexId> ids;
  ids.reserve(2 * raw.lines.size());
  for (const auto& l : raw.lines) {
    ids.push_back(l.u);
    ids.push_back(l.v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  VertexId max_id = ids.empty() ? -1 : ids.back();

  if (declared_n) {
    if (max_id >= *declared_n)
      throw std::runtime_error(path + ": vertex id " + std::to_string(max_id) +
                               " exceeds declared count " + std::to_string(*declared_n));
    raw.n = *declared_n;
  } else if (static_cast<VertexId>(ids.size()) == max_id + 1) {
    raw.n = max_id + 1;  // already contiguous
  } else {
    raw.compacted = true;
    raw.n = static_cast<VertexId>(ids.size());
    raw.original_ids = ids;
    std::unordered_map<VertexId, VertexId> to_compact;
    to_compact.reserve(ids.size());
    for (VertexId i = 0; i < raw.n; ++i) to_compact[ids[static_cast<std::size_t>(i)]] = i;
    for (auto& l : raw.lines) {
      l.u = to_compact[l.u];
      l.v = to_compact[l.v];
    }
  }
  if (!raw.compacted) {
    raw.original_ids.resize(static_cast<std::size_t>(raw.n));
    for (VertexId i = 0; i < raw.n; ++i) raw.original_ids[static_cast<std::size_t>(i)] = i;
  }
  return raw;
}

inline void format_weight(char* buf, std::size_t cap, double w) { std::snprintf(buf, cap, "%.17g", w); }

}  // namespace detail

struct ReadGraphResult {
  WeightedGraph graph;
  std::vector<VertexId> original_ids;  // compact id -> original id
  bool compacted = false;
  std::vector<std::string> warnings;
};

struct ReadDigraphResult {
  WeightedDigraph graph;
  std::vector<VertexId> original_ids;
  bool compacted = false;
  std::vector<std::string> warnings;
};

inline ReadGraphResult read_edge_list(const std::string& path) {
  auto raw = detail::read_raw(path);
  std::vector<Edge> edges;
  edges.reserve(raw.lines.size());
  for (const auto& l : raw.lines) edges.push_back({l.u, l.v, l.w});
  return {WeightedGraph(raw.n, std::move(edges)), std::move(raw.original_ids), raw.compacted,
          std::move(raw.warnings)};
}

inline ReadDigraphResult read_arc_list(const std::string& path) {
  auto raw = detail::read_raw(path);
  std::vector<Arc> arcs;
  arcs.reserve(raw.lines.size());
  for (const auto& l : raw.lines) arcs.push_back({l.u, l.v, l.w});
  return {WeightedDigraph(raw.n, std::move(arcs)), std::move(raw.original_ids), raw.compacted,
          std::move(raw.warnings)};
}

inline void write_edge_list(const std::string& path, const WeightedGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "# n " << g.num_vertices() << "\n";
  char buf[40];
  for (const Edge& e : g.edges()) {
    detail::format_weight(buf, sizeof buf, e.w);
    out << e.u << ' ' << e.v << ' ' << buf << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline void write_arc_list(const std::string& path, const WeightedDigraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "# n " << g.num_vertices() << "\n";
  char buf[40];
  for (const Arc& a : g.arcs()) {
    detail::format_weight(buf, sizeof buf, a.w);
    out << a.tail << ' ' << a.head << ' ' << buf << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

// One `original compact` pair per line.
inline void write_id_map(const std::string& path, const std::vector<VertexId>& original_ids) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (std::size_t i = 0; i < original_ids.size(); ++i)
    out << original_ids[i] << ' ' << i << "\n";
}

}  // namespace bipspar
