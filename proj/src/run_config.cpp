#include "netgame/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "netgame/io.hpp"

namespace netgame {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find(sep, start);
    const auto piece = trim(text.substr(start, end == std::string_view::npos ? end : end - start));
    if (!piece.empty()) out.push_back(piece);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

[[noreturn]] void bad(std::string_view field, std::string_view value, std::string_view why) {
  throw ConfigError(std::string(field) + ": " + std::string(why) + " (got '" +
                    std::string(value) + "')");
}

double to_double(std::string_view field, std::string_view text) {
  const std::string s = trim(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) bad(field, text, "expected a number");
  return v;
}

long long to_int(std::string_view field, std::string_view text) {
  const std::string s = trim(text);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    bad(field, text, "expected an integer");
  return v;
}

std::uint64_t to_count(std::string_view field, std::string_view text) {
  const long long v = to_int(field, text);
  if (v <= 0) bad(field, text, "must be positive");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::vector<double> parse_double_list(std::string_view text, std::string_view field) {
  std::vector<double> out;
  for (const auto& piece : split(text, ',')) out.push_back(to_double(field, piece));
  return out;
}

RunConfig RunConfig::defaults() {
  RunConfig cfg;
  if (const char* dir = std::getenv("NETGAME_OUT_DIR"); dir && *dir) cfg.out_dir = dir;
  return cfg;
}

std::vector<Vertex> RunConfig::incentivized_players() const {
  if (!zeta) return {};
  if (!incentivized_ids.empty()) {
    auto ids = incentivized_ids;
    std::sort(ids.begin(), ids.end());
    return ids;
  }
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= incentivized_count; ++v) out.push_back(v);
  return out;
}

GameConfig RunConfig::game() const {
  validate();
  GameConfig g = GameConfig::homogeneous(n, alpha, reward, cost);
  for (Vertex v : incentivized_players()) g.costs[v - 1] = *zeta;
  for (const auto& o : overrides) {
    g.rewards[o.id - 1] = o.reward;
    g.costs[o.id - 1] = o.cost;
  }
  return g;
}

DynamicsConfig RunConfig::dynamics() const {
  validate();
  DynamicsConfig d = DynamicsConfig::defaults_for(n, seed);
  if (max_proposals) d.max_proposals = *max_proposals;
  if (stall_window) d.stall_window = *stall_window;
  if (check_cadence) d.check_cadence = *check_cadence;
  return d;
}

void RunConfig::validate() const {
  if (n < 1) throw ConfigError("n: must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha: must lie in (0, 1)");
  if (!(reward > 0.0)) throw ConfigError("reward: must be positive");
  if (!(cost > 0.0)) throw ConfigError("cost: must be positive");
  if (!(alpha * (n - 1) < 1.0 - kAlphaGuardEpsilon))
    throw ConfigError("alpha: alpha * (n - 1) must stay below 1");
  if (incentivized_count < 0 || incentivized_count > n)
    throw ConfigError("incentivized_count: must lie in 0..n");
  if (zeta && !(*zeta > 0.0)) throw ConfigError("zeta: must be positive");
  for (Vertex v : incentivized_ids)
    if (v < 1 || v > n) throw ConfigError("incentivized: id " + std::to_string(v) + " out of range");
  std::set<Vertex> seen;
  for (const auto& o : overrides) {
    if (o.id < 1 || o.id > n)
      throw ConfigError("override: player " + std::to_string(o.id) + " out of range");
    if (!seen.insert(o.id).second)
      throw ConfigError("override: player " + std::to_string(o.id) + " listed twice");
  }
  for (const auto& f : formats)
    if (f != "edgelist" && f != "dot" && f != "graphml")
      throw ConfigError("formats: unknown format '" + f + "'");
  if (event_log != "all" && event_log != "accepted" && event_log != "none")
    throw ConfigError("event_log: expected all, accepted or none");

  GameConfig g = GameConfig::homogeneous(n, alpha, reward, cost);
  for (Vertex v : incentivized_players()) g.costs[v - 1] = *zeta;
  for (const auto& o : overrides) {
    g.rewards[o.id - 1] = o.reward;
    g.costs[o.id - 1] = o.cost;
  }
  g.validate();

  DynamicsConfig d = DynamicsConfig::defaults_for(n, seed);
  if (max_proposals) d.max_proposals = *max_proposals;
  if (stall_window) d.stall_window = *stall_window;
  if (check_cadence) d.check_cadence = *check_cadence;
  d.validate();
}

std::vector<std::string> RunConfig::describe() const {
  std::vector<std::string> out;
  out.push_back("n = " + std::to_string(n));
  out.push_back("alpha = " + format_double(alpha));
  out.push_back("reward = " + format_double(reward));
  out.push_back("cost = " + format_double(cost));
  if (zeta) {
    out.push_back("zeta = " + format_double(*zeta));
    std::string ids;
    for (Vertex v : incentivized_players()) ids += (ids.empty() ? "" : ",") + std::to_string(v);
    out.push_back("incentivized = " + ids);
  }
  for (const auto& o : overrides)
    out.push_back("override = " + std::to_string(o.id) + " " + format_double(o.reward) + " " +
                  format_double(o.cost));
  out.push_back("seed = " + std::to_string(seed));
  if (n >= 1) {
    DynamicsConfig d = DynamicsConfig::defaults_for(n, seed);
    if (max_proposals) d.max_proposals = *max_proposals;
    if (stall_window) d.stall_window = *stall_window;
    if (check_cadence) d.check_cadence = *check_cadence;
    out.push_back("max_proposals = " + std::to_string(d.max_proposals));
    out.push_back("stall_window = " + std::to_string(d.stall_window));
    out.push_back("check_cadence = " + std::to_string(d.check_cadence));
  }
  out.push_back(std::string("rng = ") + kRngName);
  out.push_back("event_log = " + event_log);
  return out;
}

void apply_preset(RunConfig& cfg, std::string_view name) {
  if (name == "homogeneous") {
    cfg.n = 100;
    cfg.alpha = 0.0075;
    cfg.reward = 1.0;
    cfg.cost = 0.25;
    cfg.zeta.reset();
    cfg.incentivized_count = 0;
  } else if (name == "incentivized") {
    cfg.n = 100;
    cfg.alpha = 0.0075;
    cfg.reward = 1.0;
    cfg.cost = 0.25;
    cfg.zeta = 0.20;
    cfg.incentivized_count = 5;
  } else {
    throw ConfigError("experiment: unknown preset '" + std::string(name) +
                      "' (expected homogeneous or incentivized)");
  }
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "n") {
    const long long v = to_int(key, value);
    if (v < 1 || v > 100000) bad(key, value, "must be a positive player count");
    cfg.n = static_cast<int>(v);
  } else if (key == "alpha") {
    cfg.alpha = to_double(key, value);
  } else if (key == "reward") {
    cfg.reward = to_double(key, value);
  } else if (key == "cost" || key == "gamma" || key == "delta") {
    cfg.cost = to_double(key, value);
  } else if (key == "zeta") {
    cfg.zeta = to_double(key, value);
  } else if (key == "incentivized_count") {
    const long long v = to_int(key, value);
    if (v < 0) bad(key, value, "must not be negative");
    cfg.incentivized_count = static_cast<int>(v);
  } else if (key == "incentivized") {
    cfg.incentivized_ids.clear();
    for (const auto& id : split(value, ','))
      cfg.incentivized_ids.push_back(static_cast<Vertex>(to_int(key, id)));
  } else if (key == "override") {
    std::istringstream in{std::string(value)};
    std::string id, reward, cost, extra;
    if (!(in >> id >> reward >> cost) || (in >> extra)) bad(key, value, "expected 'id reward cost'");
    cfg.overrides.push_back({static_cast<Vertex>(to_int(key, id)), to_double(key, reward),
                             to_double(key, cost)});
  } else if (key == "seed") {
    const long long v = to_int(key, value);
    if (v < 0) bad(key, value, "must not be negative");
    cfg.seed = static_cast<std::uint64_t>(v);
  } else if (key == "max_proposals") {
    cfg.max_proposals = to_count(key, value);
  } else if (key == "stall_window") {
    cfg.stall_window = to_count(key, value);
  } else if (key == "check_cadence") {
    cfg.check_cadence = to_count(key, value);
  } else if (key == "out_dir") {
    cfg.out_dir = trim(value);
  } else if (key == "formats") {
    cfg.formats = split(value, ',');
    if (cfg.formats.empty()) bad(key, value, "needs at least one format");
  } else if (key == "event_log") {
    cfg.event_log = trim(value);
  } else if (key == "experiment") {
    apply_preset(cfg, trim(value));
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
}

void apply_config_file(RunConfig& cfg, std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    try {
      apply_setting(cfg, trim(std::string_view(body).substr(0, eq)),
                    trim(std::string_view(body).substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void apply_config_file(RunConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read " + path.string());
  apply_config_file(cfg, in);
}

}  // namespace netgame
