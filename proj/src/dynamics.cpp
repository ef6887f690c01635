#include "netgame/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

namespace netgame {

DynamicsConfig DynamicsConfig::defaults_for(int n, std::uint64_t seed) {
  const auto pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
  DynamicsConfig d;
  d.seed = seed;
  d.stall_window = std::max<std::uint64_t>(1, 5 * pairs);
  d.check_cadence = std::max<std::uint64_t>(1, 10 * pairs);
  d.max_proposals = std::max<std::uint64_t>(d.stall_window,
                                            500 * static_cast<std::uint64_t>(n) * n);
  return d;
}

void DynamicsConfig::validate() const {
  if (max_proposals == 0) throw ConfigError("max_proposals must be positive");
  if (stall_window == 0) throw ConfigError("stall_window must be positive");
  if (check_cadence == 0) throw ConfigError("check_cadence must be positive");
  if (stall_window > max_proposals) throw ConfigError("stall_window must not exceed max_proposals");
}

std::string to_string(Action action) {
  switch (action) {
    case Action::AddAccepted: return "add-accepted";
    case Action::AddRejected: return "add-rejected";
    case Action::DeleteAccepted: return "delete-accepted";
    case Action::DeleteRejected: return "delete-rejected";
  }
  return "unknown";
}

std::pair<Vertex, Vertex> sample_pair(int n, Rng& rng) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  // Rejection sampling keeps the draw unbiased and independent of the
  // standard library's distribution implementation.
  const std::uint64_t span = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = span - span % pairs;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  std::uint64_t k = draw % pairs;
  Vertex i = 1;
  for (std::uint64_t row = static_cast<std::uint64_t>(n - 1); k >= row; --row) {
    k -= row;
    ++i;
  }
  return {i, static_cast<Vertex>(i + 1 + static_cast<Vertex>(k))};
}

ProposalEvent propose_step(Graph& g, const GameConfig& cfg, Rng& rng, const PayoffReport* baseline,
                           std::uint64_t index) {
  if (g.order() < 2) throw GraphError("dynamics need at least two players");
  const auto [i, j] = sample_pair(g.order(), rng);
  ProposalEvent ev;
  ev.index = index;
  ev.i = i;
  ev.j = j;
  if (!g.has_edge(i, j)) {
    ev.deltas = baseline ? marginal_add(g, cfg, i, j, *baseline) : marginal_add(g, cfg, i, j);
    if (add_wanted(ev.deltas)) {
      g.add_edge(i, j);
      ev.action = Action::AddAccepted;
    } else {
      ev.action = Action::AddRejected;
    }
  } else {
    ev.deltas =
        baseline ? marginal_delete(g, cfg, i, j, *baseline) : marginal_delete(g, cfg, i, j);
    if (delete_wanted(ev.deltas)) {
      g.remove_edge(i, j);
      ev.action = Action::DeleteAccepted;
    } else {
      ev.action = Action::DeleteRejected;
    }
  }
  return ev;
}

ProposalEvent propose_step(IncrementalPayoffs& state, Rng& rng, std::uint64_t index) {
  const Graph& g = state.graph();
  if (g.order() < 2) throw GraphError("dynamics need at least two players");
  const auto [i, j] = sample_pair(g.order(), rng);
  ProposalEvent ev;
  ev.index = index;
  ev.i = i;
  ev.j = j;
  ev.deltas = state.marginal(i, j);
  if (!g.has_edge(i, j)) {
    ev.action = add_wanted(ev.deltas) ? Action::AddAccepted : Action::AddRejected;
  } else {
    ev.action = delete_wanted(ev.deltas) ? Action::DeleteAccepted : Action::DeleteRejected;
  }
  if (ev.accepted()) state.apply(i, j);
  return ev;
}

StabilityCertificate is_pairwise_stable(const Graph& g, const GameConfig& cfg) {
  return is_pairwise_stable(IncrementalPayoffs(g, cfg));
}

StabilityCertificate is_pairwise_stable(const IncrementalPayoffs& state) {
  const Graph& g = state.graph();
  const int n = g.order();
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      const auto d = state.marginal(i, j);
      if (!g.has_edge(i, j)) {
        if (add_wanted(d)) return {false, StabilityWitness{i, j, Move::Add, d}};
      } else if (delete_wanted(d)) {
        return {false, StabilityWitness{i, j, Move::Delete, d}};
      }
    }
  }
  return {true, std::nullopt};
}

SimulationTrace run_to_stability(int n, const GameConfig& cfg, const DynamicsConfig& dyn,
                                 const EventSink& sink) {
  cfg.validate();
  dyn.validate();
  if (cfg.n != n) throw ConfigError("config player count does not match n");

  SimulationTrace trace;
  trace.n = n;
  trace.game = cfg;
  trace.dynamics = dyn;
  IncrementalPayoffs state(Graph(n), cfg);

  if (n < 2) {
    trace.final_graph = state.graph();
    trace.certificate = is_pairwise_stable(state);
    trace.converged = true;
    return trace;
  }

  Rng rng(dyn.seed);
  std::uint64_t stalled = 0;
  for (std::uint64_t p = 0; p < dyn.max_proposals; ++p) {
    const ProposalEvent ev = propose_step(state, rng, p);
    ++trace.proposals;
    if (ev.accepted()) ++trace.accepted;
    if (dyn.record_events) trace.events.push_back(ev);
    if (sink) sink(ev);
    stalled = ev.accepted() ? 0 : stalled + 1;
    if (stalled >= dyn.stall_window || (p + 1) % dyn.check_cadence == 0) {
      auto cert = is_pairwise_stable(state);
      if (cert.stable) {
        trace.certificate = std::move(cert);
        trace.converged = true;
        break;
      }
      stalled = 0;
    }
  }
  if (!trace.converged) {
    // Cap reached: the final graph still gets a full check, and only a
    // verified stable graph is reported as converged.
    trace.certificate = is_pairwise_stable(state);
    trace.converged = trace.certificate.stable;
  }
  trace.final_graph = state.graph();
  return trace;
}

double RunSummary::giant_fraction() const {
  return degrees.empty() ? 0.0 : static_cast<double>(largest_component()) / degrees.size();
}

double RunSummary::mean_degree(const std::vector<Vertex>& players) const {
  if (players.empty()) return 0.0;
  double sum = 0.0;
  for (Vertex v : players) sum += degrees.at(v - 1);
  return sum / players.size();
}

double RunSummary::mean_payoff(const std::vector<Vertex>& players) const {
  if (players.empty()) return 0.0;
  double sum = 0.0;
  for (Vertex v : players) sum += payoffs.at(v - 1);
  return sum / players.size();
}

RunSummary summarize(const SimulationTrace& trace) {
  const Graph& g = trace.final_graph;
  RunSummary s;
  s.seed = trace.dynamics.seed;
  s.converged = trace.converged;
  s.proposals = trace.proposals;
  s.accepted = trace.accepted;
  s.edges = g.edge_count();
  s.degrees = g.degrees();
  s.average_degree = 2.0 * static_cast<double>(g.edge_count()) / g.order();
  s.max_degree = g.max_degree();
  const auto report = payoff_vector(g, trace.game);
  s.total_payoff = report.total;
  s.payoffs.assign(report.payoff.data(), report.payoff.data() + report.payoff.size());
  s.component_sizes = components(g).sizes;
  std::sort(s.component_sizes.rbegin(), s.component_sizes.rend());
  return s;
}

std::vector<RunSummary> run_batch(int n, const GameConfig& cfg, const DynamicsConfig& dyn,
                                  int num_seeds, unsigned threads) {
  if (num_seeds < 1) throw ConfigError("num_seeds must be positive");
  cfg.validate();
  dyn.validate();
  std::vector<RunSummary> out(static_cast<std::size_t>(num_seeds));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(num_seeds));

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int k = next++; k < num_seeds; k = next++) {
      try {
        DynamicsConfig run = dyn;
        run.record_events = false;
        run.seed = dyn.seed + static_cast<std::uint64_t>(k);
        out[k] = summarize(run_to_stability(n, cfg, run));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace netgame
