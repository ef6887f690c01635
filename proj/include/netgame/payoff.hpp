#ifndef NETGAME_PAYOFF_HPP
#define NETGAME_PAYOFF_HPP

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "netgame/graph.hpp"
#include "netgame/katz.hpp"

namespace netgame {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Game parameters: attenuation, per-player reward R_i and per-link cost.
struct GameConfig {
  int n = 0;
  double alpha = 0.0;
  std::vector<double> rewards;
  std::vector<double> costs;

  static GameConfig homogeneous(int n, double alpha, double reward, double cost);

  double reward(Vertex v) const { return rewards[v - 1]; }
  double cost(Vertex v) const { return costs[v - 1]; }

  /// Throws ConfigError unless alpha * (n - 1) stays below 1 with the guard
  /// margin and every reward and cost is strictly positive.
  void validate() const;
};

struct PayoffReport {
  Eigen::VectorXd benefit;
  Eigen::VectorXd cost;
  Eigen::VectorXd payoff;
  double total = 0.0;
};

/// Payoff changes for the two endpoints of a single-link move.
struct MoveDeltas {
  double i = 0.0;
  double j = 0.0;

  friend MoveDeltas operator-(const MoveDeltas& d) { return {-d.i, -d.j}; }
};

/// R_i * p_i * K_i with p_i the size of i's component minus one.
double benefit(const Graph& g, const GameConfig& cfg, const CentralityReport<double>& report,
               Vertex i);

/// gamma_i * degree(i).
double cost(const Graph& g, const GameConfig& cfg, Vertex i);

PayoffReport payoff_vector(const Graph& g, const GameConfig& cfg);

/// Payoffs of i and j on g, solving only the components that contain them.
MoveDeltas endpoint_payoffs(const Graph& g, const GameConfig& cfg, Vertex i, Vertex j);

/// Payoff deltas of adding (i, j): payoff on g + (i, j) minus payoff on g.
MoveDeltas marginal_add(const Graph& g, const GameConfig& cfg, Vertex i, Vertex j);
/// Same, reusing payoffs already computed for g.
MoveDeltas marginal_add(const Graph& g, const GameConfig& cfg, Vertex i, Vertex j,
                        const PayoffReport& baseline);

/// Payoff deltas of removing (i, j): payoff on g - (i, j) minus payoff on g.
MoveDeltas marginal_delete(const Graph& g, const GameConfig& cfg, Vertex i, Vertex j);
MoveDeltas marginal_delete(const Graph& g, const GameConfig& cfg, Vertex i, Vertex j,
                           const PayoffReport& baseline);

}  // namespace netgame

#endif  // NETGAME_PAYOFF_HPP
