#ifndef NETGAME_RUN_CONFIG_HPP
#define NETGAME_RUN_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netgame/dynamics.hpp"
#include "netgame/payoff.hpp"

namespace netgame {

struct PlayerOverride {
  Vertex id = 0;
  double reward = 0.0;
  double cost = 0.0;
};

/// Everything a run needs, resolved from defaults (the homogeneous setup), a preset, a config file
/// and command-line flags (later layers win).
///
/// File format: one `key = value` per line, `#` starts a comment.
///
///   n                  player count
///   alpha              Katz attenuation
///   reward             default R_i
///   cost               default link cost (gamma, or delta with incentives)
///   zeta               link cost of incentivized players
///   incentivized_count players 1..k get cost zeta
///   incentivized       explicit comma-separated ids (overrides the count)
///   override           "id reward cost", repeatable, applied last
///   seed, max_proposals, stall_window, check_cadence
///   out_dir            output directory
///   formats            comma list of edgelist, dot, graphml
///   event_log          all, accepted or none
///   experiment         applies a preset at that point in the file
struct RunConfig {
  int n = 100;
  double alpha = 0.0075;
  double reward = 1.0;
  double cost = 0.25;
  std::optional<double> zeta;
  int incentivized_count = 0;
  std::vector<Vertex> incentivized_ids;
  std::vector<PlayerOverride> overrides;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> max_proposals;
  std::optional<std::uint64_t> stall_window;
  std::optional<std::uint64_t> check_cadence;
  std::filesystem::path out_dir = ".";
  std::vector<std::string> formats{"edgelist", "dot", "graphml"};
  std::string event_log = "all";

  /// Defaults with out_dir taken from NETGAME_OUT_DIR when set.
  static RunConfig defaults();

  /// Players paying zeta; empty without a zeta.
  std::vector<Vertex> incentivized_players() const;

  GameConfig game() const;
  DynamicsConfig dynamics() const;

  /// Throws ConfigError naming the offending field.
  void validate() const;

  /// One "key = value" line per resolved setting.
  std::vector<std::string> describe() const;
};

/// "homogeneous" or "incentivized"; throws ConfigError otherwise.
void apply_preset(RunConfig& cfg, std::string_view name);

/// Sets one key; throws ConfigError naming the key on bad input.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Applies a config file over `cfg`. Errors carry the line number.
void apply_config_file(RunConfig& cfg, std::istream& in);
void apply_config_file(RunConfig& cfg, const std::filesystem::path& path);

std::vector<double> parse_double_list(std::string_view text, std::string_view field);

}  // namespace netgame

#endif  // NETGAME_RUN_CONFIG_HPP
