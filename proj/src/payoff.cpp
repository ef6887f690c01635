#include "netgame/payoff.hpp"

#include <algorithm>
#include <string>

namespace netgame {

GameConfig GameConfig::homogeneous(int n, double alpha, double reward, double cost) {
  GameConfig cfg;
  cfg.n = n;
  cfg.alpha = alpha;
  cfg.rewards.assign(static_cast<std::size_t>(std::max(n, 0)), reward);
  cfg.costs.assign(static_cast<std::size_t>(std::max(n, 0)), cost);
  return cfg;
}

void GameConfig::validate() const {
  if (n < 1) throw ConfigError("n must be positive, got " + std::to_string(n));
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ConfigError("alpha must lie in (0, 1), got " + std::to_string(alpha));
  if (!(alpha * (n - 1) < 1.0 - kAlphaGuardEpsilon))
    throw ConfigError("alpha * (n - 1) must be below 1 (alpha = " + std::to_string(alpha) +
                      ", n = " + std::to_string(n) + ")");
  if (rewards.size() != static_cast<std::size_t>(n) || costs.size() != static_cast<std::size_t>(n))
    throw ConfigError("rewards and costs must have one entry per player");
  for (int v = 1; v <= n; ++v) {
    if (!(reward(v) > 0.0))
      throw ConfigError("reward of player " + std::to_string(v) + " must be positive");
    if (!(cost(v) > 0.0))
      throw ConfigError("cost of player " + std::to_string(v) + " must be positive");
  }
}

namespace {

void check_sizes(const Graph& g, const GameConfig& cfg) {
  if (g.order() != cfg.n)
    throw ConfigError("graph has " + std::to_string(g.order()) + " vertices but config has n = " +
                      std::to_string(cfg.n));
}

double payoff_value(const GameConfig& cfg, Vertex v, int component_size, double scaled,
                    int degree) {
  const double lambda = cfg.reward(v) * (component_size - 1) * scaled;
  const double phi = cfg.cost(v) * degree;
  return lambda - phi;
}

}  // namespace

double benefit(const Graph& g, const GameConfig& cfg, const CentralityReport<double>& report,
               Vertex i) {
  check_sizes(g, cfg);
  if (report.scaled.size() != g.order())
    throw ConfigError("centrality report does not match the graph");
  return cfg.reward(i) * (report.components.size_of(i) - 1) * report.scaled(i - 1);
}

double cost(const Graph& g, const GameConfig& cfg, Vertex i) {
  check_sizes(g, cfg);
  return cfg.cost(i) * g.degree(i);
}

PayoffReport payoff_vector(const Graph& g, const GameConfig& cfg) {
  check_sizes(g, cfg);
  const auto centrality = scaled_component_katz<double>(g, cfg.alpha);
  const int n = g.order();
  PayoffReport out;
  out.benefit.resize(n);
  out.cost.resize(n);
  out.payoff.resize(n);
  for (Vertex v = 1; v <= n; ++v) {
    out.benefit(v - 1) = benefit(g, cfg, centrality, v);
    out.cost(v - 1) = cost(g, cfg, v);
    out.payoff(v - 1) = out.benefit(v - 1) - out.cost(v - 1);
  }
  out.total = out.payoff.sum();
  return out;
}

MoveDeltas endpoint_payoffs(const Graph& g, const GameConfig& cfg, Vertex i, Vertex j) {
  check_sizes(g, cfg);
  MoveDeltas out;
  const auto members_i = component_of(g, i);
  const auto scaled_i = scaled_katz_on_component<double>(g, members_i, cfg.alpha);
  const auto size_i = static_cast<int>(members_i.size());
  const auto pos = [](const std::vector<Vertex>& m, Vertex v) {
    return std::lower_bound(m.begin(), m.end(), v) - m.begin();
  };
  out.i = payoff_value(cfg, i, size_i, scaled_i(pos(members_i, i)), g.degree(i));
  if (std::binary_search(members_i.begin(), members_i.end(), j)) {
    out.j = payoff_value(cfg, j, size_i, scaled_i(pos(members_i, j)), g.degree(j));
  } else {
    const auto members_j = component_of(g, j);
    const auto scaled_j = scaled_katz_on_component<double>(g, members_j, cfg.alpha);
    out.j = payoff_value(cfg, j, static_cast<int>(members_j.size()),
                         scaled_j(pos(members_j, j)), g.degree(j));
  }
  return out;
}

namespace {

MoveDeltas after_toggle(const Graph& g, const GameConfig& cfg, Vertex i, Vertex j,
                        const MoveDeltas& before) {
  Graph moved = g;
  moved.toggle_edge(i, j);
  const MoveDeltas after = endpoint_payoffs(moved, cfg, i, j);
  return {after.i - before.i, after.j - before.j};
}

void require_guard(const GameConfig& cfg) {
  // alpha * (n - 1) bounds alpha * lambda_0 on every graph with n vertices.
  if (!(cfg.alpha * (cfg.n - 1) < 1.0 - kAlphaGuardEpsilon))
    throw AlphaGuardError("alpha too large for the player count");
}

}  // namespace

MoveDeltas marginal_add(const Graph& g, const GameConfig& cfg, Vertex i, Vertex j) {
  require_guard(cfg);
  if (g.has_edge(i, j)) throw EdgePresentError("cannot add an existing edge");
  return after_toggle(g, cfg, i, j, endpoint_payoffs(g, cfg, i, j));
}

MoveDeltas marginal_add(const Graph& g, const GameConfig& cfg, Vertex i, Vertex j,
                        const PayoffReport& baseline) {
  require_guard(cfg);
  if (g.has_edge(i, j)) throw EdgePresentError("cannot add an existing edge");
  return after_toggle(g, cfg, i, j, {baseline.payoff(i - 1), baseline.payoff(j - 1)});
}

MoveDeltas marginal_delete(const Graph& g, const GameConfig& cfg, Vertex i, Vertex j) {
  require_guard(cfg);
  if (!g.has_edge(i, j)) throw EdgeAbsentError("cannot delete an absent edge");
  return after_toggle(g, cfg, i, j, endpoint_payoffs(g, cfg, i, j));
}

MoveDeltas marginal_delete(const Graph& g, const GameConfig& cfg, Vertex i, Vertex j,
                           const PayoffReport& baseline) {
  require_guard(cfg);
  if (!g.has_edge(i, j)) throw EdgeAbsentError("cannot delete an absent edge");
  return after_toggle(g, cfg, i, j, {baseline.payoff(i - 1), baseline.payoff(j - 1)});
}

}  // namespace netgame
