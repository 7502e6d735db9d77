#pragma once

#include <Eigen/Dense>
#include <vector>

#include "graph.hpp"

namespace bipspar {

// Dense eigensolving only; beyond this the library expects the caller to
// supply oversampling factors explicitly rather than computing spectra.
inline constexpr VertexId kMaxDenseEigensolve = 2000;

namespace detail {

// D^{-1/2} A D^{-1/2}, zero diagonal. Shared by the Laplacian and signless
// builders so that L + J == 2I holds entrywise without rounding slack.
inline Eigen::MatrixXd normalized_adjacency(const WeightedGraph& g) {
  VertexId n = g.num_vertices();
  std::vector<double> inv_sqrt(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    double d = g.degree(v);
    if (d <= 0.0)
      throw std::domain_error("normalized matrix undefined: vertex " + std::to_string(v) +
                              " has zero degree");
    inv_sqrt[static_cast<std::size_t>(v)] = 1.0 / std::sqrt(d);
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    double x = e.w * inv_sqrt[static_cast<std::size_t>(e.u)] * inv_sqrt[static_cast<std::size_t>(e.v)];
    m(e.u, e.v) = x;
    m(e.v, e.u) = x;
  }
  return m;
}

}  // namespace detail

// L = I - D^{-1/2} A D^{-1/2}
inline Eigen::MatrixXd normalized_laplacian(const WeightedGraph& g) {
  Eigen::MatrixXd m = -detail::normalized_adjacency(g);
  m.diagonal().array() = 1.0;
  return m;
}

// J = I + D^{-1/2} A D^{-1/2} = 2I - L
inline Eigen::MatrixXd signless_j(const WeightedGraph& g) {
  Eigen::MatrixXd m = detail::normalized_adjacency(g);
  m.diagonal().array() = 1.0;
  return m;
}

// Full spectrum of a symmetric matrix, ascending.
inline std::vector<double> eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigenvalues: matrix not square");
  if (m.rows() > kMaxDenseEigensolve)
    throw std::invalid_argument("eigenvalues: n > " + std::to_string(kMaxDenseEigensolve) +
                                ", dense solve refused");
  if (m.size() > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("eigenvalues: matrix not symmetric within 1e-10");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalues: solver failed");
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

struct SpectralSummary {
  VertexId n = 0;
  std::vector<double> laplacian;  // ascending
  std::vector<double> signless;   // ascending
};

inline SpectralSummary spectral_summary(const WeightedGraph& g) {
  SpectralSummary s;
  s.n = g.num_vertices();
  s.laplacian = eigenvalues(normalized_laplacian(g));
  s.signless = eigenvalues(signless_j(g));
  return s;
}

}  // namespace bipspar
