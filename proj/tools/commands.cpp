#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "netgame/dynamics.hpp"
#include "netgame/io.hpp"
#include "netgame/katz.hpp"

namespace netgame::cli {

namespace fs = std::filesystem;

namespace {

/// Calls job(k) for k in [0, count) on up to `threads` workers and rethrows
/// the first failure.
template <typename Job>
void parallel_for(std::size_t count, unsigned threads, const Job& job) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        job(k);
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
}

std::vector<std::string> header(const std::string& command, const RunConfig& cfg) {
  std::vector<std::string> lines{"netgame " + command};
  for (auto& line : cfg.describe()) lines.push_back(std::move(line));
  return lines;
}

std::string describe_witness(const StabilityCertificate& cert) {
  if (cert.stable || !cert.witness) return "stable";
  const auto& w = *cert.witness;
  std::ostringstream s;
  s << "unstable: " << (w.move == Move::Add ? "add " : "delete ") << w.i << ' ' << w.j
    << " (delta_i = " << format_double(w.deltas.i) << ", delta_j = " << format_double(w.deltas.j)
    << ')';
  return s.str();
}

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw std::runtime_error("out_dir: cannot create " + dir.string() +
                             (ec ? " (" + ec.message() + ")" : std::string()));
}

struct RunOutcome {
  RunSummary summary;
  std::string message;
  std::string metrics_row;
  std::string metrics_header;
};

RunOutcome simulate_into(const RunConfig& cfg, const fs::path& dir) {
  ensure_directory(dir);
  const GameConfig game = cfg.game();
  DynamicsConfig dyn = cfg.dynamics();
  dyn.record_events = false;
  const auto comments = header("simulate", cfg);

  const fs::path log_path = dir / "events.log";
  fs::path log_tmp = log_path;
  log_tmp += ".tmp";
  std::ofstream events;
  EventSink sink;
  if (cfg.event_log != "none") {
    events.open(log_tmp, std::ios::binary | std::ios::trunc);
    if (!events) throw std::runtime_error("out_dir: cannot write " + log_tmp.string());
    write_event_header(events, comments);
    if (cfg.event_log == "all")
      sink = [&events](const ProposalEvent& ev) { write_event(events, ev); };
    else
      sink = [&events](const ProposalEvent& ev) {
        if (ev.accepted()) write_event(events, ev);
      };
  }

  const SimulationTrace trace = run_to_stability(cfg.n, game, dyn, sink);

  if (events.is_open()) {
    write_event_summary(events, trace);
    events.close();
    if (!events) throw std::runtime_error("out_dir: write failed for " + log_tmp.string());
    fs::rename(log_tmp, log_path);
  }

  const Graph& g = trace.final_graph;
  auto graph_comments = comments;
  graph_comments.push_back(std::string("converged = ") + (trace.converged ? "1" : "0"));
  graph_comments.push_back("certificate = " + describe_witness(trace.certificate));
  for (const auto& format : cfg.formats) {
    if (format == "edgelist")
      write_atomically(dir / "graph.edgelist",
                       [&](std::ostream& o) { write_edge_list(o, g, graph_comments); });
    else if (format == "dot")
      write_atomically(dir / "graph.dot", [&](std::ostream& o) { write_dot(o, g, graph_comments); });
    else if (format == "graphml")
      write_atomically(dir / "graph.graphml",
                       [&](std::ostream& o) { write_graphml(o, g, graph_comments); });
  }

  RunOutcome outcome;
  outcome.summary = summarize(trace);
  const RunSummary& s = outcome.summary;
  const auto incentivized = cfg.incentivized_players();

  std::ostringstream metrics;
  write_metrics(metrics, s, cfg.alpha, incentivized);
  const std::string record = metrics.str();
  const auto split = record.find('\n');
  outcome.metrics_header = record.substr(0, split + 1);
  outcome.metrics_row = record.substr(split + 1);
  write_atomically(dir / "metrics.csv", [&](std::ostream& o) {
    write_metrics(o, s, cfg.alpha, incentivized, comments);
  });

  const PayoffReport payoffs = payoff_vector(g, game);
  write_atomically(dir / "payoffs.csv",
                   [&](std::ostream& o) { write_payoff_csv(o, payoffs, comments); });
  const auto centrality = scaled_component_katz<double>(g, cfg.alpha);
  write_atomically(dir / "centrality.csv",
                   [&](std::ostream& o) { write_centrality_csv(o, centrality, comments); });

  if (!incentivized.empty()) {
    write_atomically(dir / "incentivized.csv", [&](std::ostream& o) {
      for (const auto& c : comments) o << "# " << c << '\n';
      o << "# population_mean_degree = " << format_double(s.average_degree) << '\n'
        << "# incentivized_mean_degree = " << format_double(s.mean_degree(incentivized)) << '\n';
      o << "vertex,cost,degree,payoff\n";
      for (Vertex v : incentivized)
        o << v << ',' << format_double(game.cost(v)) << ',' << g.degree(v) << ','
          << format_double(payoffs.payoff(v - 1)) << '\n';
    });
  }

  std::ostringstream msg;
  msg << "seed " << s.seed << ": "
      << (trace.converged ? "converged" : "did not converge") << " after " << s.proposals
      << " proposals (" << s.accepted << " accepted); " << s.edges << " edges, average degree "
      << format_double(s.average_degree) << ", total payoff " << format_double(s.total_payoff)
      << ", largest component " << s.largest_component();
  if (!incentivized.empty())
    msg << ", incentivized mean degree " << format_double(s.mean_degree(incentivized));
  if (!trace.converged) msg << "; final graph " << describe_witness(trace.certificate);
  outcome.message = msg.str();
  return outcome;
}

void apply_flags(RunConfig& cfg, const Flags& f) {
  if (f.n) apply_setting(cfg, "n", std::to_string(*f.n));
  if (f.alpha) cfg.alpha = *f.alpha;
  if (f.reward) cfg.reward = *f.reward;
  if (f.gamma && f.delta) throw ConfigError("gamma/delta: give only one of them");
  if (f.gamma) cfg.cost = *f.gamma;
  if (f.delta) cfg.cost = *f.delta;
  if (f.zeta) cfg.zeta = *f.zeta;
  if (f.incentivized_count) apply_setting(cfg, "incentivized_count", std::to_string(*f.incentivized_count));
  if (f.incentivized) apply_setting(cfg, "incentivized", *f.incentivized);
  for (const auto& o : f.overrides) apply_setting(cfg, "override", o);
  if (f.seed) cfg.seed = *f.seed;
  if (f.max_proposals) cfg.max_proposals = *f.max_proposals;
  if (f.stall_window) cfg.stall_window = *f.stall_window;
  if (f.check_cadence) cfg.check_cadence = *f.check_cadence;
  if (f.out_dir) cfg.out_dir = *f.out_dir;
  if (!f.formats.empty()) cfg.formats = f.formats;
  if (f.event_log) cfg.event_log = *f.event_log;
}

}  // namespace

RunConfig resolve(const Flags& flags) {
  RunConfig cfg = RunConfig::defaults();
  if (flags.experiment) apply_preset(cfg, *flags.experiment);
  if (flags.config) apply_config_file(cfg, *flags.config);
  apply_flags(cfg, flags);
  return cfg;
}

int cmd_simulate(const RunConfig& cfg, int seeds, unsigned threads, std::ostream& out,
                 std::ostream& err) {
  try {
    cfg.validate();
    if (seeds < 1) throw ConfigError("seeds: must be positive");
    if (seeds == 1) {
      const RunOutcome r = simulate_into(cfg, cfg.out_dir);
      out << r.message << '\n' << "artifacts in " << cfg.out_dir.string() << '\n';
      return r.summary.converged ? kExitOk : kExitUnstable;
    }

    ensure_directory(cfg.out_dir);
    std::vector<RunOutcome> results(static_cast<std::size_t>(seeds));
    parallel_for(results.size(), threads, [&](std::size_t k) {
      RunConfig run = cfg;
      run.seed = cfg.seed + k;
      results[k] = simulate_into(run, cfg.out_dir / ("seed-" + std::to_string(run.seed)));
    });
    bool all_converged = true;
    for (const auto& r : results) {
      out << r.message << '\n';
      all_converged = all_converged && r.summary.converged;
    }
    write_atomically(cfg.out_dir / "metrics.csv", [&](std::ostream& o) {
      for (const auto& c : header("simulate", cfg)) o << "# " << c << '\n';
      o << "# seeds = " << cfg.seed << ".." << cfg.seed + seeds - 1 << '\n';
      o << results.front().metrics_header;
      for (const auto& r : results) o << r.metrics_row;
    });
    out << "artifacts in " << cfg.out_dir.string() << '\n';
    return all_converged ? kExitOk : kExitUnstable;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err,
               const ClosedFormSet& forms) {
  try {
    if (opts.n_min < 2) throw ConfigError("n-min: must be at least 2");
    if (opts.n_min > opts.n_max) throw ConfigError("n-min: exceeds n-max");
    if (opts.alpha_scales.empty() && opts.alphas.empty())
      throw ConfigError("alpha grid: no alpha values given");
    for (double a : opts.alphas)
      if (!std::isfinite(a)) throw ConfigError("alphas: non-finite value");
    for (double s : opts.alpha_scales)
      if (!std::isfinite(s)) throw ConfigError("alpha-scales: non-finite value");

    const VerificationReport report =
        verify_closed_forms(opts.n_min, opts.n_max, AlphaGrid{opts.alphas, opts.alpha_scales}, forms);
    ensure_directory(opts.out_dir);
    write_atomically(opts.out_dir / "verification.csv",
                     [&](std::ostream& o) { write_verification_csv(o, report); });

    std::map<std::string, std::pair<double, int>> per_lemma;
    for (const auto& row : report.rows) {
      auto& [worst, rows] = per_lemma[row.lemma];
      if (row.status != RowStatus::Skipped) worst = std::max(worst, row.abs_error);
      ++rows;
    }
    for (const auto& [lemma, stat] : per_lemma)
      out << lemma << ": max abs error " << format_double(stat.first) << " over " << stat.second
          << " rows\n";
    out << "pass " << report.count(RowStatus::Pass) << ", fail " << report.count(RowStatus::Fail)
        << ", audit mismatch " << report.count(RowStatus::AuditMismatch) << ", audit match "
        << report.count(RowStatus::AuditMatch) << ", skipped " << report.count(RowStatus::Skipped)
        << '\n';
    out << "report in " << (opts.out_dir / "verification.csv").string() << '\n';
    return report.all_pass() ? kExitOk : kExitUnstable;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_stability_check(const fs::path& graph_file, RunConfig cfg, std::ostream& out,
                        std::ostream& err) {
  try {
    Graph g = [&] {
      try {
        return read_edge_list(graph_file);
      } catch (const EdgeListError& e) {
        throw std::runtime_error(graph_file.string() + ": " + e.what());
      }
    }();
    cfg.n = g.order();
    const GameConfig game = cfg.game();
    const StabilityCertificate cert = is_pairwise_stable(g, game);
    const PayoffReport payoffs = payoff_vector(g, game);
    out << describe_witness(cert) << '\n'
        << "n = " << g.order() << ", edges = " << g.edge_count() << ", total payoff = "
        << format_double(payoffs.total) << '\n';
    return cert.stable ? kExitOk : kExitUnstable;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_sweep(const RunConfig& base, const SweepOptions& opts, std::ostream& out,
              std::ostream& err) {
  try {
    static const std::vector<std::string> numeric{"n",     "alpha", "reward", "cost",
                                                  "gamma", "delta", "zeta",   "incentivized_count"};
    if (std::find(numeric.begin(), numeric.end(), opts.parameter) == numeric.end())
      throw ConfigError("sweep: cannot sweep '" + opts.parameter + "'");
    if (opts.values.empty()) throw ConfigError("values: empty range");
    if (opts.seeds < 1) throw ConfigError("seeds: must be positive");

    std::vector<RunConfig> points;
    for (double v : opts.values) {
      RunConfig cfg = base;
      apply_setting(cfg, opts.parameter, format_double(v));
      cfg.validate();
      points.push_back(std::move(cfg));
    }
    if (opts.parameter == "zeta" && points.front().incentivized_players().empty())
      err << "warning: no incentivized players, zeta has no effect\n";
    ensure_directory(base.out_dir);

    const std::size_t per_point = static_cast<std::size_t>(opts.seeds);
    std::vector<RunSummary> runs(points.size() * per_point);
    parallel_for(runs.size(), opts.threads, [&](std::size_t k) {
      const RunConfig& cfg = points[k / per_point];
      DynamicsConfig dyn = cfg.dynamics();
      dyn.seed = cfg.seed + k % per_point;
      dyn.record_events = false;
      runs[k] = summarize(run_to_stability(cfg.n, cfg.game(), dyn));
    });

    const auto comments = header("sweep", base);
    bool all_converged = true;
    write_atomically(base.out_dir / "sweep.csv", [&](std::ostream& o) {
      for (const auto& c : comments) o << "# " << c << '\n';
      o << "parameter,value,seed,converged,proposals,edges,avg_degree,total_payoff,"
           "giant_fraction,max_degree,incentivized_mean_degree,incentivized_mean_payoff\n";
      for (std::size_t k = 0; k < runs.size(); ++k) {
        const RunSummary& s = runs[k];
        const auto players = points[k / per_point].incentivized_players();
        all_converged = all_converged && s.converged;
        o << opts.parameter << ',' << format_double(opts.values[k / per_point]) << ',' << s.seed
          << ',' << (s.converged ? 1 : 0) << ',' << s.proposals << ',' << s.edges << ','
          << format_double(s.average_degree) << ',' << format_double(s.total_payoff) << ','
          << format_double(s.giant_fraction()) << ',' << s.max_degree << ',';
        if (players.empty())
          o << ",\n";
        else
          o << format_double(s.mean_degree(players)) << ','
            << format_double(s.mean_payoff(players)) << '\n';
      }
    });

    if (!points.front().incentivized_players().empty()) {
      struct Trend {
        double value, incentivized_payoff, total_payoff;
        int converged;
      };
      std::vector<Trend> trend;
      for (std::size_t p = 0; p < points.size(); ++p) {
        Trend t{opts.values[p], 0.0, 0.0, 0};
        const auto players = points[p].incentivized_players();
        for (std::size_t s = 0; s < per_point; ++s) {
          const RunSummary& r = runs[p * per_point + s];
          t.incentivized_payoff += r.mean_payoff(players) / per_point;
          t.total_payoff += r.total_payoff / per_point;
          t.converged += r.converged ? 1 : 0;
        }
        trend.push_back(t);
      }
      std::sort(trend.begin(), trend.end(),
                [](const Trend& a, const Trend& b) { return a.value < b.value; });
      bool up = true, down = true;
      for (std::size_t k = 1; k < trend.size(); ++k) {
        up = up && trend[k].incentivized_payoff >= trend[k - 1].incentivized_payoff;
        down = down && trend[k].incentivized_payoff <= trend[k - 1].incentivized_payoff;
      }
      const std::string verdict = trend.size() < 2 ? "single point"
                                  : down          ? "nonincreasing"
                                  : up            ? "nondecreasing"
                                                  : "not monotone";
      write_atomically(base.out_dir / "sweep_trend.csv", [&](std::ostream& o) {
        for (const auto& c : comments) o << "# " << c << '\n';
        o << "# incentivized payoff is " << verdict << " in " << opts.parameter << '\n';
        o << "value,mean_incentivized_payoff,mean_total_payoff,converged_runs\n";
        for (const auto& t : trend)
          o << format_double(t.value) << ',' << format_double(t.incentivized_payoff) << ','
            << format_double(t.total_payoff) << ',' << t.converged << '\n';
      });
      for (const auto& t : trend)
        out << opts.parameter << " = " << format_double(t.value)
            << ": mean incentivized payoff " << format_double(t.incentivized_payoff)
            << ", mean total payoff " << format_double(t.total_payoff) << ", converged "
            << t.converged << "/" << per_point << '\n';
      out << "trend: incentivized payoff is " << verdict << " in " << opts.parameter << '\n';
    }
    out << runs.size() << " runs written to " << (base.out_dir / "sweep.csv").string() << '\n';
    return all_converged ? kExitOk : kExitUnstable;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace netgame::cli
