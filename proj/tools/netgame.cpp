// netgame: simulate, verify, stability-check and sweep front end.

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace netgame;
using namespace netgame::cli;

namespace {

void add_run_options(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config, "Config file (key = value lines)");
  app->add_option("--experiment", f.experiment, "Preset")
      ->check(CLI::IsMember({"homogeneous", "incentivized"}));
  app->add_option("--n", f.n, "Number of players");
  app->add_option("--alpha", f.alpha, "Katz attenuation");
  app->add_option("--reward", f.reward, "Default reward R");
  app->add_option("--gamma", f.gamma, "Link cost for every player");
  app->add_option("--delta", f.delta, "Link cost of regular players");
  app->add_option("--zeta", f.zeta, "Link cost of incentivized players");
  app->add_option("--incentivized-count", f.incentivized_count, "Players 1..k pay zeta");
  app->add_option("--incentivized", f.incentivized, "Explicit incentivized ids, e.g. 3,8,20");
  app->add_option("--override", f.overrides, "Per-player 'id reward cost' (repeatable)");
  app->add_option("--seed", f.seed, "First RNG seed");
  app->add_option("--max-proposals", f.max_proposals, "Proposal cap");
  app->add_option("--stall-window", f.stall_window, "Rejected proposals before a full check");
  app->add_option("--check-cadence", f.check_cadence, "Proposals between forced checks");
  app->add_option("--out-dir", f.out_dir, "Output directory (default $NETGAME_OUT_DIR or .)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Network formation game engine"};
  app.require_subcommand(1);

  Flags flags;
  int seeds = 1;
  unsigned threads = 0;

  auto* simulate = app.add_subcommand("simulate", "Run the dynamics to a pairwise stable graph");
  add_run_options(simulate, flags);
  simulate->add_option("--seeds", seeds, "Number of consecutive seeds")->check(CLI::PositiveNumber);
  simulate->add_option("--threads", threads, "Worker threads (0 = all cores)");
  simulate->add_option("--format", flags.formats, "Graph formats")
      ->delimiter(',')
      ->check(CLI::IsMember({"edgelist", "dot", "graphml"}));
  simulate->add_option("--event-log", flags.event_log, "Proposals to log")
      ->check(CLI::IsMember({"all", "accepted", "none"}));

  VerifyOptions verify_opts;
  bool scales_given = false;
  auto* verify = app.add_subcommand("verify", "Compare closed forms against numerical centrality");
  verify->add_option("--n-min", verify_opts.n_min, "Smallest n")->capture_default_str();
  verify->add_option("--n-max", verify_opts.n_max, "Largest n")->capture_default_str();
  verify
      ->add_option("--alpha-scales", verify_opts.alpha_scales, "Relative alphas s, alpha = s/(n-1)")
      ->delimiter(',')
      ->each([&](const std::string&) { scales_given = true; });
  verify->add_option("--alphas", verify_opts.alphas, "Absolute alphas")->delimiter(',');
  std::optional<std::filesystem::path> verify_out;
  verify->add_option("--out-dir", verify_out, "Output directory");

  std::filesystem::path graph_file;
  auto* check = app.add_subcommand("stability-check", "Test a graph for pairwise stability");
  check->add_option("--graph", graph_file, "Edge-list file")->required();
  add_run_options(check, flags);

  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Batch runs over one parameter");
  add_run_options(sweep, flags);
  sweep->add_option("--param", sweep_opts.parameter, "Parameter to vary")->capture_default_str();
  sweep->add_option("--values", sweep_opts.values, "Comma-separated values")
      ->delimiter(',')
      ->required();
  sweep->add_option("--seeds", sweep_opts.seeds, "Seeds per point")->check(CLI::PositiveNumber);
  sweep->add_option("--threads", sweep_opts.threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*verify) {
    // Absolute alphas alone replace the default relative grid.
    if (!verify_opts.alphas.empty() && !scales_given) verify_opts.alpha_scales.clear();
    if (verify_out) {
      verify_opts.out_dir = *verify_out;
    } else if (const char* dir = std::getenv("NETGAME_OUT_DIR"); dir && *dir) {
      verify_opts.out_dir = dir;
    }
    return cmd_verify(verify_opts, std::cout, std::cerr);
  }

  RunConfig cfg;
  try {
    cfg = resolve(flags);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (*simulate) return cmd_simulate(cfg, seeds, threads, std::cout, std::cerr);
  if (*check) return cmd_stability_check(graph_file, cfg, std::cout, std::cerr);
  return cmd_sweep(cfg, sweep_opts, std::cout, std::cerr);
}
