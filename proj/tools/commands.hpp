#ifndef NETGAME_TOOLS_COMMANDS_HPP
#define NETGAME_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netgame/run_config.hpp"
#include "netgame/verify.hpp"

namespace netgame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnstable = 2;

/// Values given on the command line; unset fields leave the layer below alone.
struct Flags {
  std::optional<std::filesystem::path> config;
  std::optional<std::string> experiment;
  std::optional<int> n;
  std::optional<double> alpha;
  std::optional<double> reward;
  std::optional<double> gamma;
  std::optional<double> delta;
  std::optional<double> zeta;
  std::optional<int> incentivized_count;
  std::optional<std::string> incentivized;
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> max_proposals;
  std::optional<std::uint64_t> stall_window;
  std::optional<std::uint64_t> check_cadence;
  std::optional<std::filesystem::path> out_dir;
  std::vector<std::string> formats;
  std::optional<std::string> event_log;
};

/// defaults < NETGAME_OUT_DIR < --experiment preset < --config file < flags.
/// Validation is left to the command, which may still adjust n.
RunConfig resolve(const Flags& flags);

/// Runs the dynamics and writes the artifacts into cfg.out_dir, or into
/// seed-<s> subdirectories when seeds > 1. Exit 0 iff every run converged.
int cmd_simulate(const RunConfig& cfg, int seeds, unsigned threads, std::ostream& out,
                 std::ostream& err);

struct VerifyOptions {
  int n_min = 3;
  int n_max = 30;
  std::vector<double> alpha_scales{0.25, 0.5, 0.75};
  std::vector<double> alphas;
  std::filesystem::path out_dir = ".";
};

/// Writes verification.csv; exit 0 iff every implemented closed form passes.
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err,
               const ClosedFormSet& forms = {});

/// Checks the graph in `graph_file` under `cfg` (its n is taken from the
/// file). Exit 0 iff pairwise stable.
int cmd_stability_check(const std::filesystem::path& graph_file, RunConfig cfg, std::ostream& out,
                        std::ostream& err);

struct SweepOptions {
  /// Any numeric config key: n, alpha, reward, cost, gamma, delta, zeta,
  /// incentivized_count.
  std::string parameter = "zeta";
  std::vector<double> values;
  int seeds = 1;
  unsigned threads = 0;
};

/// Writes sweep.csv with one row per (value, seed), plus sweep_trend.csv
/// when incentivized players are present. Exit 2 if any run failed to
/// converge.
int cmd_sweep(const RunConfig& base, const SweepOptions& opts, std::ostream& out,
              std::ostream& err);

}  // namespace netgame::cli

#endif  // NETGAME_TOOLS_COMMANDS_HPP
