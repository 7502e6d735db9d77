#include <bipspar/spectral.hpp>

#include <catch2/catch_amalgamated.hpp>
#include <queue>

#include "test_util.hpp"

using namespace bipspar;

namespace {

bool two_colorable(const WeightedGraph& g) {
  std::vector<int> color(g.num_vertices(), -1);
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (const auto& nb : g.neighbors(v)) {
        if (color[nb.v] == -1) {
          color[nb.v] = 1 - color[v];
          q.push(nb.v);
        } else if (color[nb.v] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("normalized laplacian of a single edge") {
  WeightedGraph g(2, {{0, 1, 1}});
  Eigen::MatrixXd l = normalized_laplacian(g);
  CHECK(l(0, 0) == 1.0);
  CHECK(l(1, 1) == 1.0);
  CHECK(l(0, 1) == -1.0);
  CHECK(l(1, 0) == -1.0);

  Eigen::MatrixXd j = signless_j(g);
  CHECK(j(0, 0) == 1.0);
  CHECK(j(0, 1) == 1.0);
}

TEST_CASE("J + L == 2I entrywise, exactly") {
  for (std::uint64_t seed : {3u, 4u, 5u}) {
    WeightedGraph g = random_test_graph(15, 0.4, seed, false, true);
    Eigen::MatrixXd sum = normalized_laplacian(g) + signless_j(g);
    Eigen::MatrixXd expect = 2.0 * Eigen::MatrixXd::Identity(15, 15);
    CHECK((sum - expect).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("known spectra") {
  WeightedGraph k22(4, {{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}});
  auto ev = eigenvalues(normalized_laplacian(k22));
  REQUIRE(ev.size() == 4);
  CHECK_THAT(ev[0], Catch::Matchers::WithinAbs(0.0, 1e-8));
  CHECK_THAT(ev[1], Catch::Matchers::WithinAbs(1.0, 1e-8));
  CHECK_THAT(ev[2], Catch::Matchers::WithinAbs(1.0, 1e-8));
  CHECK_THAT(ev[3], Catch::Matchers::WithinAbs(2.0, 1e-8));

  WeightedGraph tri(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  auto evt = eigenvalues(normalized_laplacian(tri));
  CHECK_THAT(evt[0], Catch::Matchers::WithinAbs(0.0, 1e-8));
  CHECK_THAT(evt[1], Catch::Matchers::WithinAbs(1.5, 1e-8));
  CHECK_THAT(evt[2], Catch::Matchers::WithinAbs(1.5, 1e-8));

  auto evj = eigenvalues(signless_j(tri));
  CHECK_THAT(evj[0], Catch::Matchers::WithinAbs(0.5, 1e-8));
  CHECK_THAT(evj[1], Catch::Matchers::WithinAbs(0.5, 1e-8));
  CHECK_THAT(evj[2], Catch::Matchers::WithinAbs(2.0, 1e-8));

  // C4: cycle spectrum 1 - cos(2 pi k / n)
  WeightedGraph c4(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
  auto evc = eigenvalues(normalized_laplacian(c4));
  CHECK_THAT(evc[0], Catch::Matchers::WithinAbs(0.0, 1e-8));
  CHECK_THAT(evc[1], Catch::Matchers::WithinAbs(1.0, 1e-8));
  CHECK_THAT(evc[2], Catch::Matchers::WithinAbs(1.0, 1e-8));
  CHECK_THAT(evc[3], Catch::Matchers::WithinAbs(2.0, 1e-8));
}

TEST_CASE("eigenvalues of trivial matrices") {
  auto id = eigenvalues(Eigen::MatrixXd::Identity(3, 3));
  CHECK(id == std::vector<double>{1.0, 1.0, 1.0});

  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
  d(1, 1) = 2.0;
  auto ev = eigenvalues(d);
  CHECK_THAT(ev[0], Catch::Matchers::WithinAbs(0.0, 1e-12));
  CHECK_THAT(ev[1], Catch::Matchers::WithinAbs(2.0, 1e-12));
}

TEST_CASE("eigenvalues input validation") {
  Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(eigenvalues(asym), std::invalid_argument);

  CHECK_THROWS_AS(eigenvalues(Eigen::MatrixXd::Zero(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(eigenvalues(Eigen::MatrixXd::Identity(2001, 2001)), std::invalid_argument);

  WeightedGraph isolated(3, {{0, 1, 1}});
  CHECK_THROWS_AS(normalized_laplacian(isolated), std::domain_error);
}

TEST_CASE("spectrum range and the J/L eigenvalue identity") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    int n = 3 + static_cast<int>(seed % 20);
    WeightedGraph g = random_test_graph(n, 0.35, seed, false, true);
    auto s = spectral_summary(g);
    CHECK_THAT(s.laplacian.front(), Catch::Matchers::WithinAbs(0.0, 1e-8));
    for (double l : s.laplacian) {
      CHECK(l >= -1e-8);
      CHECK(l <= 2.0 + 1e-8);
    }
    for (int i = 0; i < n; ++i)
      CHECK_THAT(s.signless[i], Catch::Matchers::WithinAbs(2.0 - s.laplacian[n - 1 - i], 1e-8));
  }
}

TEST_CASE("bipartite iff top laplacian eigenvalue is 2") {
  // bipartite: random subgraphs of K_{n1,n2} plus a star keeping both sides covered
  for (std::uint64_t seed : {7u, 8u, 9u}) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0, 1);
    int n1 = 4, n = 9;
    std::vector<Edge> edges;
    for (int u = 0; u < n1; ++u)
      for (int v = n1; v < n; ++v)
        if (coin(rng) < 0.5) edges.push_back({u, v, 1.0});
    for (int v = n1; v < n; ++v) edges.push_back({0, v, 1.0});
    for (int u = 0; u < n1; ++u) edges.push_back({u, n1, 1.0});
    WeightedGraph g(n, edges);
    REQUIRE(two_colorable(g));
    auto ev = eigenvalues(normalized_laplacian(g));
    CHECK_THAT(ev.back(), Catch::Matchers::WithinAbs(2.0, 1e-8));
  }
  // non-bipartite: anything with an odd cycle
  WeightedGraph tri(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  REQUIRE_FALSE(two_colorable(tri));
  CHECK(eigenvalues(normalized_laplacian(tri)).back() < 2.0 - 1e-8);

  for (std::uint64_t seed : {10u, 11u}) {
    WeightedGraph g = random_test_graph(10, 0.5, seed, false, true);
    auto ev = eigenvalues(normalized_laplacian(g));
    bool spectral_bipartite = std::abs(ev.back() - 2.0) <= 1e-8;
    CHECK(spectral_bipartite == two_colorable(g));
  }
}
