#include <bipspar/sbm.hpp>

#include <bipspar/graph.hpp>
#include <catch2/catch_amalgamated.hpp>
#include <cmath>

using namespace bipspar;

namespace {

SbmSpec undirected_spec(VertexId n1, VertexId n2, double p, double q, std::uint64_t seed) {
  SbmSpec s;
  s.n1 = n1;
  s.n2 = n2;
  s.p = p;
  s.q = q;
  s.seed = seed;
  return s;
}

SbmSpec directed_spec(VertexId n1, VertexId n2, double eta, std::uint64_t seed) {
  SbmSpec s;
  s.n1 = n1;
  s.n2 = n2;
  s.eta = eta;
  s.seed = seed;
  return s;
}

}  // namespace

TEST_CASE("degenerate probabilities") {
  auto [kb, pair] = sbm_undirected(undirected_spec(3, 4, 1.0, 0.0, 1));
  CHECK(kb.num_edges() == 12);  // complete bipartite K_{3,4}
  CHECK(bipartiteness(kb, pair) == 1.0);

  auto [empty, pair2] = sbm_undirected(undirected_spec(3, 4, 0.0, 0.0, 1));
  CHECK(empty.num_edges() == 0);
}

TEST_CASE("planted pair is disjoint and covers all vertices") {
  auto [g, pair] = sbm_undirected(undirected_spec(5, 7, 0.5, 0.1, 42));
  CHECK(pair.A.size() == 5);
  CHECK(pair.B.size() == 7);
  std::vector<char> seen(12, 0);
  for (VertexId v : pair.A) seen[v] = 1;
  for (VertexId v : pair.B) {
    CHECK(seen[v] == 0);
    seen[v] = 1;
  }
  CHECK(std::count(seen.begin(), seen.end(), 1) == 12);
}

TEST_CASE("generation is deterministic for a fixed SbmSpec") {
  auto a = sbm_undirected(undirected_spec(20, 20, 0.3, 0.03, 9)).first;
  auto b = sbm_undirected(undirected_spec(20, 20, 0.3, 0.03, 9)).first;
  REQUIRE(a.num_edges() == b.num_edges());
  for (std::size_t i = 0; i < a.num_edges(); ++i) {
    CHECK(a.edges()[i].u == b.edges()[i].u);
    CHECK(a.edges()[i].v == b.edges()[i].v);
  }
  auto c = sbm_undirected(undirected_spec(20, 20, 0.3, 0.03, 10)).first;
  CHECK(a.num_edges() != c.num_edges());  // overwhelmingly likely
}

TEST_CASE("edge counts concentrate on the binomial mean") {
  VertexId n1 = 60, n2 = 60;
  double p = 0.3, q = 0.03;
  double cross_pairs = static_cast<double>(n1) * n2;
  double intra_pairs = n1 * (n1 - 1) / 2.0 + n2 * (n2 - 1) / 2.0;
  double mean = p * cross_pairs + q * intra_pairs;
  double sd = std::sqrt(p * (1 - p) * cross_pairs + q * (1 - q) * intra_pairs);
  int outliers = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = sbm_undirected(undirected_spec(n1, n2, p, q, seed)).first;
    if (std::abs(static_cast<double>(g.num_edges()) - mean) > 4.0 * sd) ++outliers;
  }
  CHECK(outliers <= 1);
}

TEST_CASE("planted bipartiteness approaches p*n / (p*n + q*(n-1))") {
  double p = 0.3, q = 0.03;
  VertexId n = 500;
  double expect = p * n / (p * n + q * (n - 1));
  double sum = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto [g, pair] = sbm_undirected(undirected_spec(n, n, p, q, seed));
    sum += bipartiteness(g, pair);
  }
  CHECK_THAT(sum / 10.0, Catch::Matchers::WithinAbs(expect, 0.01));
}

TEST_CASE("directed generator respects the probability matrix") {
  // eta = 1: every cross arc points L -> R
  auto [g, pair] = sbm_directed(directed_spec(30, 30, 1.0, 3));
  std::size_t lr = 0, rl = 0;
  for (const Arc& a : g.arcs()) {
    bool tail_left = a.tail < 30, head_left = a.head < 30;
    if (tail_left && !head_left) ++lr;
    if (!tail_left && head_left) ++rl;
  }
  CHECK(lr == 30u * 30u);
  CHECK(rl == 0u);

  // eta = 0.5: both directions balanced within 4 standard deviations
  auto half = sbm_directed(directed_spec(100, 100, 0.5, 4)).first;
  double lr2 = 0, rl2 = 0;
  for (const Arc& a : half.arcs()) {
    bool tail_left = a.tail < 100, head_left = a.head < 100;
    if (tail_left && !head_left) ++lr2;
    if (!tail_left && head_left) ++rl2;
  }
  double sd = std::sqrt(2 * 10000 * 0.25);
  CHECK(std::abs(lr2 - rl2) <= 4.0 * sd);
}

TEST_CASE("planted flow ratio matches its closed form") {
  VertexId n = 500;
  double eta = 0.7;
  double cross = eta * static_cast<double>(n) * n;
  double expect_phibar = 2 * cross / (2 * cross + 9.0 * (n - 1) * 2);
  double sum = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto [g, pair] = sbm_directed(directed_spec(n, n, eta, seed));
    sum += flow_ratio(g, pair);
  }
  CHECK_THAT(sum / 10.0, Catch::Matchers::WithinAbs(1.0 - expect_phibar, 0.02));
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(sbm_undirected(undirected_spec(0, 5, 0.5, 0.1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(sbm_undirected(undirected_spec(5, 5, 1.5, 0.1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(sbm_undirected(undirected_spec(5, 5, 0.5, -0.1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(sbm_directed(directed_spec(5, 5, 1.01, 1)), std::invalid_argument);
}
