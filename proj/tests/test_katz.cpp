#include <random>

#include "doctest.h"
#include "netgame/katz.hpp"
#include "oracles.hpp"

using namespace netgame;
using doctest::Approx;

TEST_CASE("alpha guard") {
  CHECK(alpha_guard(Graph::complete(5), 0.1));
  CHECK_FALSE(alpha_guard(Graph::complete(5), 0.3));
  CHECK(alpha_guard(Graph(4), 0.99));
  // Degree bound fails but the spectral radius (2) passes.
  CHECK(alpha_guard(Graph::star(5), 0.4));
  CHECK_FALSE(alpha_guard(Graph::complete(5), 0.25));
  CHECK_THROWS_AS(alpha_guard(Graph(3), 0.0), AlphaGuardError);
  CHECK_THROWS_AS(alpha_guard(Graph(3), 1.0), AlphaGuardError);
  CHECK_THROWS_AS(raw_katz(Graph::complete(5), 0.3), AlphaGuardError);
}

TEST_CASE("raw Katz") {
  const auto c = raw_katz(Graph::complete(5), 0.1);
  for (Eigen::Index k = 0; k < 5; ++k) CHECK(c(k) == Approx(2.0 / 3.0).epsilon(1e-14));

  Graph g(3);
  g.add_edge(1, 2);
  const auto d = raw_katz(g, 0.2);
  CHECK(d(2) == 0.0);
  CHECK(d(0) == Approx(0.2 / 0.8).epsilon(1e-14));
}

TEST_CASE("raw Katz matches the walk series") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 15;
    const Graph g = oracle::random_graph(n, 0.35, rng);
    const double alpha = 0.6 / std::max(1.0, spectral_radius(g));
    const auto ours = raw_katz(g, alpha);
    const auto series = oracle::series_katz(g, alpha);
    for (int v = 0; v < n; ++v) CHECK(std::abs(ours(v) - static_cast<double>(series[v])) < 1e-11);
  }
}

TEST_CASE("scaled component Katz") {
  for (int n = 2; n <= 12; ++n) {
    const auto r = scaled_component_katz(Graph::complete(n), 0.5 / (n - 1));
    for (Eigen::Index k = 0; k < n; ++k) CHECK(r.scaled(k) == Approx(1.0 / n).epsilon(1e-13));
  }

  const auto s = scaled_component_katz(Graph::star(5), 0.1);
  CHECK(s.scaled(0) == Approx(0.44).epsilon(1e-13));
  for (Eigen::Index k = 1; k < 5; ++k) CHECK(s.scaled(k) == Approx(0.14).epsilon(1e-13));
  CHECK(s.scaled.sum() == Approx(1.0).epsilon(1e-14));

  Graph g(4);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(1, 3);
  const auto t = scaled_component_katz(g, 0.1);
  for (Eigen::Index k = 0; k < 3; ++k) CHECK(t.scaled(k) == Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(t.scaled(3) == 1.0);
  CHECK(t.raw(3) == 0.0);
  CHECK(t.components.sizes == std::vector<int>{3, 1});
  CHECK(t.alpha == 0.1);
}

TEST_CASE("mixed components") {
  Graph g(8);
  for (Vertex i = 1; i <= 6; ++i)
    for (Vertex j = i + 1; j <= 6; ++j) g.add_edge(i, j);
  g.add_edge(7, 8);
  const auto r = scaled_component_katz(g, 0.1);
  CHECK(r.scaled(6) == Approx(0.5));
  CHECK(r.scaled(0) == Approx(1.0 / 6.0));
  CHECK_THROWS_AS(scaled_component_katz(g, 0.21), AlphaGuardError);
}

TEST_CASE("scaled Katz matches the series oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 18;
    const Graph g = oracle::random_graph(n, 0.2, rng);
    const double alpha = 0.5 / std::max(1.0, spectral_radius(g));
    const auto ours = scaled_component_katz(g, alpha);
    const auto theirs = oracle::series_scaled(g, alpha);
    for (int v = 0; v < n; ++v)
      CHECK(std::abs(ours.scaled(v) - static_cast<double>(theirs[v])) < 1e-12);
  }
}

TEST_CASE("long double scalar") {
  const auto r = scaled_component_katz<long double>(Graph::star(6), 0.1L);
  CHECK(std::abs(static_cast<double>(r.scaled.sum() - 1.0L)) < 1e-15);
  const auto d = scaled_component_katz<double>(Graph::star(6), 0.1);
  CHECK(std::abs(static_cast<double>(r.scaled(0)) - d.scaled(0)) < 1e-14);
}

TEST_CASE("hub share shrinks as alpha grows") {
  const Graph s = Graph::star(7);
  double last = 1.0;
  for (double a = 0.02; a < 0.4; a += 0.02) {
    const double hub = scaled_component_katz(s, a).scaled(0);
    CHECK(hub < last);
    last = hub;
  }
}

TEST_CASE("adding an edge never lowers raw Katz") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 10;
    Graph g = oracle::random_graph(n, 0.25, rng);
    std::uniform_int_distribution<Vertex> pick(1, n);
    Vertex i = pick(rng), j = pick(rng);
    if (i == j || g.has_edge(i, j)) continue;
    const double alpha = 0.9 / n;  // valid for every graph on n vertices
    const auto before = raw_katz(g, alpha);
    g.add_edge(i, j);
    const auto after = raw_katz(g, alpha);
    for (int v = 0; v < n; ++v) CHECK(after(v) >= before(v) - 1e-15);
    CHECK(after(i - 1) > before(i - 1));
    CHECK(after(j - 1) > before(j - 1));
  }
}

TEST_CASE("complete-graph share decays with n") {
  double last = 1.0;
  for (int n = 2; n <= 30; ++n) {
    const double k = scaled_component_katz(Graph::complete(n), 0.5 / (n - 1)).scaled(0);
    CHECK(k < last);
    last = k;
  }
}
