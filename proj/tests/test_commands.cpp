#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "netgame/io.hpp"

using namespace netgame;
using namespace netgame::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), {});
}

RunConfig small_game(const fs::path& out, int n = 10) {
  Flags f;
  f.n = n;
  f.alpha = 0.05;
  f.gamma = 0.15;
  f.out_dir = out;
  return resolve(f);
}

}  // namespace

TEST_CASE("flag precedence") {
  TempDir tmp("netgame_cmd_precedence");
  const auto file = tmp.path / "run.cfg";
  std::ofstream(file) << "n = 30\nalpha = 0.02\nseed = 5\n";
  Flags f;
  f.experiment = "incentivized";
  f.config = file;
  f.seed = 9;
  const auto cfg = resolve(f);
  CHECK(cfg.n == 30);        // file beats preset
  CHECK(cfg.alpha == 0.02);
  CHECK(cfg.seed == 9);      // flag beats file
  CHECK(*cfg.zeta == 0.20);  // preset beats defaults
  f.gamma = 0.1;
  f.delta = 0.2;
  CHECK_THROWS_AS(resolve(f), ConfigError);
}

TEST_CASE("simulate writes every artifact") {
  TempDir tmp("netgame_cmd_sim");
  std::ostringstream out, err;
  auto cfg = small_game(tmp.path);
  CHECK(cmd_simulate(cfg, 1, 1, out, err) == kExitOk);
  for (const char* name : {"graph.edgelist", "graph.dot", "graph.graphml", "metrics.csv",
                           "payoffs.csv", "centrality.csv", "events.log"})
    CHECK(fs::exists(tmp.path / name));
  CHECK_FALSE(fs::exists(tmp.path / "incentivized.csv"));
  const std::string metrics = slurp(tmp.path / "metrics.csv");
  CHECK(metrics.find("# seed = 1") != std::string::npos);
  CHECK(metrics.find("seed,n,alpha,converged") != std::string::npos);
  const std::string log = slurp(tmp.path / "events.log");
  CHECK(log.find("# summary proposals=") != std::string::npos);
  CHECK(out.str().find("converged") != std::string::npos);
}

TEST_CASE("two players with expensive links") {
  TempDir tmp("netgame_cmd_two");
  Flags f;
  f.n = 2;
  f.gamma = 0.6;
  f.out_dir = tmp.path;
  std::ostringstream out, err;
  CHECK(cmd_simulate(resolve(f), 1, 1, out, err) == kExitOk);
  CHECK(read_edge_list(tmp.path / "graph.edgelist").edge_count() == 0);
  CHECK(out.str().find("total payoff 0") != std::string::npos);
}

TEST_CASE("simulate output is reproducible") {
  TempDir a("netgame_cmd_det_a"), b("netgame_cmd_det_b");
  std::ostringstream out, err;
  REQUIRE(cmd_simulate(small_game(a.path, 14), 1, 1, out, err) == kExitOk);
  REQUIRE(cmd_simulate(small_game(b.path, 14), 1, 1, out, err) == kExitOk);
  CHECK(slurp(a.path / "graph.edgelist") == slurp(b.path / "graph.edgelist"));
  CHECK(slurp(a.path / "events.log") == slurp(b.path / "events.log"));
}

TEST_CASE("simulated graph passes stability-check") {
  TempDir tmp("netgame_cmd_roundtrip");
  std::ostringstream out, err;
  auto cfg = small_game(tmp.path, 12);
  REQUIRE(cmd_simulate(cfg, 1, 1, out, err) == kExitOk);
  std::ostringstream check_out;
  CHECK(cmd_stability_check(tmp.path / "graph.edgelist", cfg, check_out, err) == kExitOk);
  CHECK(check_out.str().rfind("stable", 0) == 0);
}

TEST_CASE("multiple seeds get their own directories") {
  TempDir tmp("netgame_cmd_seeds");
  std::ostringstream out, err;
  auto cfg = small_game(tmp.path);
  cfg.event_log = "none";
  CHECK(cmd_simulate(cfg, 3, 2, out, err) == kExitOk);
  for (int s = 1; s <= 3; ++s) {
    CHECK(fs::exists(tmp.path / ("seed-" + std::to_string(s)) / "graph.edgelist"));
    CHECK_FALSE(fs::exists(tmp.path / ("seed-" + std::to_string(s)) / "events.log"));
  }
  std::istringstream metrics(slurp(tmp.path / "metrics.csv"));
  int rows = 0;
  for (std::string line; std::getline(metrics, line);)
    if (!line.empty() && line[0] != '#') ++rows;
  CHECK(rows == 4);
}

TEST_CASE("incentivized run reports the hub players") {
  TempDir tmp("netgame_cmd_incentive");
  Flags f;
  f.n = 20;
  f.alpha = 0.03;
  f.delta = 0.25;
  f.zeta = 0.1;
  f.incentivized_count = 2;
  f.out_dir = tmp.path;
  std::ostringstream out, err;
  CHECK(cmd_simulate(resolve(f), 1, 1, out, err) == kExitOk);
  const std::string report = slurp(tmp.path / "incentivized.csv");
  CHECK(report.find("vertex,cost,degree,payoff\n1,0.10000000000000001,") != std::string::npos);
}

TEST_CASE("non-convergence exits with 2") {
  TempDir tmp("netgame_cmd_cap");
  std::ostringstream out, err;
  auto cfg = small_game(tmp.path);
  cfg.max_proposals = 2;
  cfg.stall_window = 1;
  CHECK(cmd_simulate(cfg, 1, 1, out, err) == kExitUnstable);
  CHECK(out.str().find("did not converge") != std::string::npos);
  CHECK(fs::exists(tmp.path / "graph.edgelist"));
}

TEST_CASE("config problems exit with 1") {
  TempDir tmp("netgame_cmd_bad");
  std::ostringstream out, err;
  auto cfg = small_game(tmp.path);
  cfg.alpha = 0.5;
  CHECK(cmd_simulate(cfg, 1, 1, out, err) == kExitUsage);
  CHECK(err.str().find("alpha") != std::string::npos);

  auto blocked = small_game(tmp.path / "file");
  std::ofstream(tmp.path / "file") << "x";
  std::ostringstream err2;
  CHECK(cmd_simulate(blocked, 1, 1, out, err2) == kExitUsage);
  CHECK(err2.str().find("out_dir") != std::string::npos);
}

TEST_CASE("verify") {
  TempDir tmp("netgame_cmd_verify");
  std::ostringstream out, err;
  VerifyOptions opts;
  opts.out_dir = tmp.path;
  CHECK(cmd_verify(opts, out, err) == kExitOk);
  CHECK(slurp(tmp.path / "verification.csv").rfind("lemma,n,alpha", 0) == 0);

  ClosedFormSet broken;
  broken.complete_threshold = [](int n, double a) { return 1.001 * complete_stable_threshold<double>(n, a); };
  CHECK(cmd_verify(opts, out, err, broken) != kExitOk);

  VerifyOptions skip = opts;
  skip.alpha_scales = {};
  skip.alphas = {0.9};
  CHECK(cmd_verify(skip, out, err) == kExitOk);
  CHECK(slurp(tmp.path / "verification.csv").find("skipped") != std::string::npos);

  VerifyOptions inverted = opts;
  inverted.n_min = 10;
  inverted.n_max = 5;
  CHECK(cmd_verify(inverted, out, err) == kExitUsage);
  VerifyOptions empty = opts;
  empty.alpha_scales.clear();
  CHECK(cmd_verify(empty, out, err) == kExitUsage);
}

TEST_CASE("stability-check") {
  TempDir tmp("netgame_cmd_check");
  const auto k5 = tmp.path / "k5.txt";
  const auto s5 = tmp.path / "s5.txt";
  std::ofstream(k5) << "n 5\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n";
  std::ofstream(s5) << "n 5\n1 2\n1 3\n1 4\n1 5\n";
  RunConfig cfg;
  cfg.alpha = 0.1;
  cfg.cost = 0.1;
  std::ostringstream out, err;
  CHECK(cmd_stability_check(k5, cfg, out, err) == kExitOk);
  cfg.cost = 0.12;
  std::ostringstream witness;
  CHECK(cmd_stability_check(k5, cfg, witness, err) == kExitUnstable);
  CHECK(witness.str().rfind("unstable: delete 1 2", 0) == 0);
  cfg.cost = 0.6;
  CHECK(cmd_stability_check(s5, cfg, out, err) == kExitUnstable);

  const auto bad = tmp.path / "bad.txt";
  std::ofstream(bad) << "n 3\n1 2\n3 3\n";
  std::ostringstream bad_err;
  CHECK(cmd_stability_check(bad, cfg, out, bad_err) == kExitUsage);
  CHECK(bad_err.str().find("line 3") != std::string::npos);
  CHECK(cmd_stability_check(tmp.path / "none.txt", cfg, out, err) == kExitUsage);
}

TEST_CASE("sweep") {
  TempDir tmp("netgame_cmd_sweep");
  Flags f;
  f.n = 16;
  f.alpha = 0.04;
  f.delta = 0.25;
  f.zeta = 0.2;
  f.incentivized_count = 2;
  f.out_dir = tmp.path;
  const auto base = resolve(f);
  std::ostringstream out, err;

  SweepOptions one;
  one.values = {0.2};
  CHECK(cmd_sweep(base, one, out, err) == kExitOk);
  std::istringstream rows(slurp(tmp.path / "sweep.csv"));
  int data = 0;
  for (std::string line; std::getline(rows, line);)
    if (!line.empty() && line[0] != '#') ++data;
  CHECK(data == 2);

  SweepOptions zeta;
  zeta.values = {0.10, 0.15, 0.20, 0.25};
  zeta.seeds = 2;
  std::ostringstream trend;
  CHECK(cmd_sweep(base, zeta, trend, err) == kExitOk);
  CHECK(trend.str().find("trend: incentivized payoff is") != std::string::npos);
  CHECK(fs::exists(tmp.path / "sweep_trend.csv"));

  SweepOptions empty;
  CHECK(cmd_sweep(base, empty, out, err) == kExitUsage);
  SweepOptions unknown;
  unknown.parameter = "seed";
  unknown.values = {1};
  CHECK(cmd_sweep(base, unknown, out, err) == kExitUsage);
}
