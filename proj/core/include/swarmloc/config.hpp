#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "swarmloc/experiment.hpp"

namespace swarmloc {

/// Applies one `key = value` setting. Recognized keys:
///
///   n_sus, half_width, pu_distance, pu_bearing, deploy_seed,
///   bandwidth_hz, snr0_db, antenna_height, noise (on/off),
///   swarm_size, iterations, bound, v_max,
///   tse_max_iterations, tse_step_tolerance, tse_weighting (on/off),
///   variants, trials, emitter (x,y), pu_threshold, su_threshold,
///   out, seed, redeploy_per_trial (on/off), threads, checkpoints (t,t,...)
///
/// Throws ConfigError for unknown keys or unparsable values.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);

/// Reads `key = value` lines; `#` starts a comment.
void load_config(ExperimentConfig& cfg, std::istream& in);
void load_config_file(ExperimentConfig& cfg, const std::filesystem::path& path);

}  // namespace swarmloc
