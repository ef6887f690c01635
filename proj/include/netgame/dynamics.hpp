#ifndef NETGAME_DYNAMICS_HPP
#define NETGAME_DYNAMICS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "netgame/graph.hpp"
#include "netgame/incremental.hpp"
#include "netgame/payoff.hpp"

namespace netgame {

/// Generator behind every randomized run. Its output sequence is fixed by the
/// C++ standard, and pair sampling uses it directly, so traces reproduce
/// across compilers.
using Rng = std::mt19937_64;
inline constexpr const char* kRngName = "mt19937_64";

struct DynamicsConfig {
  std::uint64_t seed = 0;
  std::uint64_t max_proposals = 0;
  std::uint64_t stall_window = 0;
  std::uint64_t check_cadence = 0;
  /// Keep every proposal in SimulationTrace::events.
  bool record_events = true;

  /// 5 P rejected proposals before a full check, a forced check every 10 P
  /// proposals, and a cap of 500 n^2, where P = n (n - 1) / 2.
  static DynamicsConfig defaults_for(int n, std::uint64_t seed);

  void validate() const;
};

enum class Action { AddAccepted, AddRejected, DeleteAccepted, DeleteRejected };

std::string to_string(Action action);

struct ProposalEvent {
  std::uint64_t index = 0;
  Vertex i = 0;
  Vertex j = 0;
  Action action = Action::AddRejected;
  MoveDeltas deltas;

  bool accepted() const {
    return action == Action::AddAccepted || action == Action::DeleteAccepted;
  }
  bool is_add() const { return action == Action::AddAccepted || action == Action::AddRejected; }
};

enum class Move { Add, Delete };

struct StabilityWitness {
  Vertex i = 0;
  Vertex j = 0;
  Move move = Move::Add;
  MoveDeltas deltas;
};

struct StabilityCertificate {
  bool stable = true;
  std::optional<StabilityWitness> witness;
};

struct SimulationTrace {
  int n = 0;
  GameConfig game;
  DynamicsConfig dynamics;
  std::string rng = kRngName;
  std::vector<ProposalEvent> events;
  std::uint64_t proposals = 0;
  std::uint64_t accepted = 0;
  Graph final_graph{1};
  StabilityCertificate certificate;
  bool converged = false;
};

/// Uniform unordered pair {i, j}, i < j, from the raw generator output.
std::pair<Vertex, Vertex> sample_pair(int n, Rng& rng);

/// Bilateral consent to add: both deltas strictly positive.
inline bool add_wanted(const MoveDeltas& d) { return d.i > 0.0 && d.j > 0.0; }
/// Unilateral deletion: either delta strictly positive.
inline bool delete_wanted(const MoveDeltas& d) { return d.i > 0.0 || d.j > 0.0; }

/// Samples one pair and applies the add or delete rule to `g` in place,
/// re-solving the affected components. `baseline`, when given, must hold
/// payoff_vector(g, cfg).
ProposalEvent propose_step(Graph& g, const GameConfig& cfg, Rng& rng,
                           const PayoffReport* baseline = nullptr, std::uint64_t index = 0);

/// Same rule on an incrementally maintained state.
ProposalEvent propose_step(IncrementalPayoffs& state, Rng& rng, std::uint64_t index = 0);

/// Scans all pairs in lexicographic order; the first profitable move is the
/// witness.
StabilityCertificate is_pairwise_stable(const Graph& g, const GameConfig& cfg);
StabilityCertificate is_pairwise_stable(const IncrementalPayoffs& state);

using EventSink = std::function<void(const ProposalEvent&)>;

/// Runs the dynamics from the empty graph until a scheduled full check
/// certifies stability or the proposal cap is hit. `sink`, when set, sees
/// every proposal as it happens.
SimulationTrace run_to_stability(int n, const GameConfig& cfg, const DynamicsConfig& dyn,
                                 const EventSink& sink = {});

struct RunSummary {
  std::uint64_t seed = 0;
  bool converged = false;
  std::uint64_t proposals = 0;
  std::uint64_t accepted = 0;
  std::size_t edges = 0;
  double average_degree = 0.0;
  double total_payoff = 0.0;
  int max_degree = 0;
  /// Component sizes, largest first.
  std::vector<int> component_sizes;
  std::vector<int> degrees;
  std::vector<double> payoffs;

  int largest_component() const { return component_sizes.empty() ? 0 : component_sizes.front(); }
  double giant_fraction() const;
  /// Mean degree and payoff over the given players.
  double mean_degree(const std::vector<Vertex>& players) const;
  double mean_payoff(const std::vector<Vertex>& players) const;
};

RunSummary summarize(const SimulationTrace& trace);

/// Independent runs with seeds dyn.seed, dyn.seed + 1, ... in seed order.
/// `threads` = 0 picks the hardware concurrency.
std::vector<RunSummary> run_batch(int n, const GameConfig& cfg, const DynamicsConfig& dyn,
                                  int num_seeds, unsigned threads = 0);

}  // namespace netgame

#endif  // NETGAME_DYNAMICS_HPP
