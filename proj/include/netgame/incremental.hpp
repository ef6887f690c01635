#ifndef NETGAME_INCREMENTAL_HPP
#define NETGAME_INCREMENTAL_HPP

#include <vector>

#include <Eigen/Dense>

#include "netgame/graph.hpp"
#include "netgame/payoff.hpp"

namespace netgame {

/// Payoffs of a graph under single-link changes, kept current incrementally.
///
/// Each connected component caches the inverse of its Katz system
/// M = I - alpha A^T. Toggling the link (i, j) perturbs M by a rank-2 term, so
/// the Woodbury identity gives the hypothetical Katz vector of the endpoints
/// and the component sums in O(1), or O(size) when a deletion splits the
/// component. Applying a move updates the inverse in O(size^2) and
/// refactorizes a block from scratch every `kRefreshInterval` updates.
///
/// Results agree with marginal_add / marginal_delete to rounding; those
/// remain the reference path.
class IncrementalPayoffs {
 public:
  static constexpr int kRefreshInterval = 32;

  IncrementalPayoffs(Graph g, GameConfig cfg);

  const Graph& graph() const { return graph_; }
  const GameConfig& config() const { return cfg_; }

  double payoff(Vertex v) const { return payoff_[v - 1]; }
  double total_payoff() const;

  /// Deltas of toggling (i, j): an add when absent, a delete when present.
  MoveDeltas marginal(Vertex i, Vertex j) const;

  /// Toggles (i, j) and updates every cache.
  void apply(Vertex i, Vertex j);

 private:
  struct Block {
    std::vector<Vertex> members;  // ascending
    Eigen::MatrixXd inverse;      // (I - alpha A^T)^{-1} on the block
    Eigen::VectorXd y;            // inverse * 1
    Eigen::RowVectorXd colsum;    // 1^T * inverse
    double ysum = 0.0;
    int updates = 0;
  };

  struct Perturbation {
    double sign = 1.0;  // +1 add, -1 delete
    Eigen::Vector2d w;  // S^{-1} V^T y
    Eigen::Matrix2d s_inv;
  };

  Block factor(std::vector<Vertex> members) const;
  void finish(Block& b) const;
  void install(Block b);
  void refresh_payoffs(const Block& b);
  void remove_block(int id);

  Perturbation perturb(Vertex i, Vertex j, bool add) const;
  double inv(Vertex r, Vertex c) const;
  /// Vertices reachable from `from` inside its block once (i, j) is removed.
  std::vector<Vertex> reach_without(Vertex from, Vertex i, Vertex j) const;
  double endpoint_payoff(Vertex v, const std::vector<Vertex>& part, Vertex i, Vertex j,
                         const Perturbation& p, int new_degree) const;

  Graph graph_;
  GameConfig cfg_;
  std::vector<Block> blocks_;
  std::vector<int> block_of_;
  std::vector<int> index_in_block_;
  std::vector<double> payoff_;
};

}  // namespace netgame

#endif  // NETGAME_INCREMENTAL_HPP
