#include "swarmloc/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <string>

#include "swarmloc/errors.hpp"

namespace swarmloc {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view v) {
  v = trim(v);
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw ConfigError(std::string(key), "cannot parse '" + std::string(v) + "'");
  return out;
}

bool parse_flag(std::string_view key, std::string_view v) {
  v = trim(v);
  if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
  if (v == "off" || v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(std::string(key), "expected on/off, got '" + std::string(v) + "'");
}

Point parse_point(std::string_view key, std::string_view v) {
  const auto comma = v.find(',');
  if (comma == std::string_view::npos) throw ConfigError(std::string(key), "expected x,y");
  return {parse_number<double>(key, v.substr(0, comma)), parse_number<double>(key, v.substr(comma + 1))};
}

std::vector<int> parse_int_list(std::string_view key, std::string_view v) {
  std::vector<int> out;
  while (!v.empty()) {
    const auto comma = v.find(',');
    const std::string_view item = trim(v.substr(0, comma));
    if (!item.empty()) out.push_back(parse_number<int>(key, item));
    if (comma == std::string_view::npos) break;
    v.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "n_sus") cfg.scenario.n_sus = parse_number<int>(key, value);
  else if (key == "half_width") cfg.scenario.half_width = parse_number<double>(key, value);
  else if (key == "pu_distance") cfg.scenario.pu_distance = parse_number<double>(key, value);
  else if (key == "pu_bearing") cfg.scenario.pu_bearing = parse_number<double>(key, value);
  else if (key == "deploy_seed") cfg.scenario.seed = parse_number<std::uint64_t>(key, value);
  else if (key == "bandwidth_hz") cfg.noise.bandwidth_hz = parse_number<double>(key, value);
  else if (key == "snr0_db") cfg.noise.snr0_db = parse_number<double>(key, value);
  else if (key == "antenna_height") cfg.noise.antenna_height_m = parse_number<double>(key, value);
  else if (key == "noise") cfg.noise.noise_enabled = parse_flag(key, value);
  else if (key == "swarm_size") cfg.pso.swarm_size = parse_number<int>(key, value);
  else if (key == "iterations") cfg.pso.max_iterations = parse_number<int>(key, value);
  else if (key == "bound") cfg.pso.bound = parse_number<double>(key, value);
  else if (key == "v_max") cfg.pso.v_max = parse_number<double>(key, value);
  else if (key == "tse_max_iterations") cfg.tse.max_iterations = parse_number<int>(key, value);
  else if (key == "tse_step_tolerance") cfg.tse.step_tolerance = parse_number<double>(key, value);
  else if (key == "tse_weighting") cfg.tse.weighting = parse_flag(key, value);
  else if (key == "variants") {
    try {
      cfg.variants = resolve_variants(value);
    } catch (const UsageError& e) {
      throw ConfigError("variants", e.what());
    }
  } else if (key == "trials") cfg.trials = parse_number<int>(key, value);
  else if (key == "emitter") cfg.emitter = parse_point(key, value);
  else if (key == "pu_threshold") cfg.thresholds.pu_threshold = parse_number<double>(key, value);
  else if (key == "su_threshold") cfg.thresholds.su_threshold = parse_number<double>(key, value);
  else if (key == "out") cfg.out_dir = std::string(value);
  else if (key == "seed") cfg.master_seed = parse_number<std::uint64_t>(key, value);
  else if (key == "redeploy_per_trial") cfg.redeploy_per_trial = parse_flag(key, value);
  else if (key == "threads") cfg.threads = parse_number<int>(key, value);
  else if (key == "checkpoints") cfg.checkpoints = parse_int_list(key, value);
  else throw ConfigError(std::string(key), "unknown configuration key");
}

void load_config(ExperimentConfig& cfg, std::istream& in) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view v = line;
    if (const auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    v = trim(v);
    if (v.empty()) continue;
    const auto eq = v.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(lineno), "expected key = value");
    apply_setting(cfg, v.substr(0, eq), v.substr(eq + 1));
  }
}

void load_config_file(ExperimentConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  load_config(cfg, in);
}

}  // namespace swarmloc
