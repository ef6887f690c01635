// Reference computations for the tests. Nothing here calls the library's
// solvers: centrality comes from summing the walk series, components from a
// plain union-find, and spectral radii from power iteration.

#ifndef NETGAME_TESTS_ORACLES_HPP
#define NETGAME_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "netgame/graph.hpp"
#include "netgame/payoff.hpp"

namespace oracle {

using netgame::Graph;
using netgame::Vertex;

inline std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<int>> adj(g.order());
  for (Vertex i = 1; i <= g.order(); ++i)
    for (Vertex j = 1; j <= g.order(); ++j)
      if (i != j && g.has_edge(i, j)) adj[i - 1].push_back(j - 1);
  return adj;
}

/// Raw Katz by summing alpha^k (A^T)^k 1 for k >= 1 until terms vanish.
inline std::vector<long double> series_katz(const Graph& g, long double alpha) {
  const auto adj = adjacency_lists(g);
  const std::size_t n = adj.size();
  std::vector<long double> term(n, 1.0L), sum(n, 0.0L), next(n);
  for (int k = 1; k < 100000; ++k) {
    long double largest = 0.0L;
    for (std::size_t v = 0; v < n; ++v) {
      long double acc = 0.0L;
      for (int u : adj[v]) acc += term[u];
      next[v] = alpha * acc;
      largest = std::max(largest, next[v]);
    }
    term.swap(next);
    for (std::size_t v = 0; v < n; ++v) sum[v] += term[v];
    if (largest < 1e-22L) break;
  }
  return sum;
}

/// Component id per vertex (0-based vertices), by union-find.
inline std::vector<int> component_ids(const Graph& g) {
  const int n = g.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j)
      if (g.has_edge(i, j)) parent[find(i - 1)] = find(j - 1);
  std::vector<int> id(n);
  for (int v = 0; v < n; ++v) id[v] = find(v);
  return id;
}

inline std::vector<long double> series_scaled(const Graph& g, long double alpha) {
  const auto raw = series_katz(g, alpha);
  const auto id = component_ids(g);
  const std::size_t n = raw.size();
  std::vector<long double> total(n, 0.0L), scaled(n);
  std::vector<int> size(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    total[id[v]] += raw[v];
    ++size[id[v]];
  }
  for (std::size_t v = 0; v < n; ++v) scaled[v] = size[id[v]] == 1 ? 1.0L : raw[v] / total[id[v]];
  return scaled;
}

/// Payoff of every player straight from the definition.
inline std::vector<long double> brute_payoffs(const Graph& g, const netgame::GameConfig& cfg) {
  const auto scaled = series_scaled(g, cfg.alpha);
  const auto id = component_ids(g);
  const int n = g.order();
  std::vector<int> size(n, 0);
  for (int v = 0; v < n; ++v) ++size[id[v]];
  std::vector<long double> out(n);
  for (Vertex v = 1; v <= n; ++v)
    out[v - 1] = static_cast<long double>(cfg.reward(v)) * (size[id[v - 1]] - 1) * scaled[v - 1] -
                 static_cast<long double>(cfg.cost(v)) * g.degree(v);
  return out;
}

/// Stability straight from the definition, comparing full payoff vectors.
inline bool brute_stable(const Graph& g, const netgame::GameConfig& cfg) {
  const auto base = brute_payoffs(g, cfg);
  for (Vertex i = 1; i <= g.order(); ++i)
    for (Vertex j = i + 1; j <= g.order(); ++j) {
      Graph h = g;
      h.toggle_edge(i, j);
      const auto next = brute_payoffs(h, cfg);
      const long double di = next[i - 1] - base[i - 1];
      const long double dj = next[j - 1] - base[j - 1];
      if (g.has_edge(i, j) ? (di > 0 || dj > 0) : (di > 0 && dj > 0)) return false;
    }
  return true;
}

/// Largest adjacency eigenvalue by power iteration on A + I (shift avoids
/// oscillation on bipartite graphs).
inline double power_spectral_radius(const Graph& g) {
  const auto adj = adjacency_lists(g);
  const std::size_t n = adj.size();
  if (g.edge_count() == 0) return 0.0;
  std::vector<double> x(n), y(n);
  for (std::size_t v = 0; v < n; ++v) x[v] = 1.0 + 0.01 * static_cast<double>(v % 7);
  double lambda = 0.0;
  for (int it = 0; it < 200000; ++it) {
    double norm = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      y[v] = x[v];
      for (int u : adj[v]) y[v] += x[u];
      norm += y[v] * y[v];
    }
    norm = std::sqrt(norm);
    double rayleigh = 0.0, xx = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      rayleigh += x[v] * y[v];
      xx += x[v] * x[v];
    }
    const double next = rayleigh / xx - 1.0;
    for (std::size_t v = 0; v < n; ++v) x[v] = y[v] / norm;
    if (it > 50 && std::abs(next - lambda) < 1e-14) return next;
    lambda = next;
  }
  return lambda;
}

/// Every labelled graph on n vertices, indexed by edge bitmask.
inline std::vector<Graph> all_graphs(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask & (1u << k)) g.add_edge(pairs[k].first, pairs[k].second);
    out.push_back(std::move(g));
  }
  return out;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace oracle

#endif  // NETGAME_TESTS_ORACLES_HPP
