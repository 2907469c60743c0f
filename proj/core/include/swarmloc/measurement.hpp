#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "swarmloc/geometry.hpp"
#include "swarmloc/random.hpp"
#include "swarmloc/scenario.hpp"

namespace swarmloc {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

/// Distances below this are rejected by the path-loss model.
inline constexpr double kMinPathLossDistance = 1.0;  // m

struct NoiseModel {
  double bandwidth_hz = 6.0e6;
  double snr0_db = -10.0;
  double antenna_height_m = 1.5;
  bool noise_enabled = true;

  void validate() const;
};

/// Range differences d_i - d_0 measured against the base station, one per SU,
/// with the total per-SU noise variance in range units.
struct RangeDifferenceSet {
  std::vector<double> values;        // m
  std::vector<double> variances_m2;  // m^2

  std::size_t size() const { return values.size(); }

  /// FNV-1a over the raw bytes of both vectors.
  std::uint64_t content_hash() const;
};

/// distance(emitter, su) - distance(emitter, bs).
double true_range_difference(const Point& emitter, const Point& su, const Point& bs);

/// Differential suburban Hata path loss between distances d_i and d_0:
/// [44.9 - 6.55 log10(h)] log10(d_i / d_0). Throws DomainError unless every
/// argument is positive.
double path_loss_delta_db(double d_i, double d_0, double antenna_height_m);

inline double snr_at_su_db(double snr0_db, double delta_lp_db) { return snr0_db - delta_lp_db; }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// Time-of-arrival variance bound 1 / (8 pi^2 B^2 SNR), in s^2, taken with
/// equality. Throws DomainError for non-positive bandwidth or SNR.
double toa_variance_s2(double bandwidth_hz, double snr_linear);

/// Per-SU range-difference variance c^2 (sigma_i^2 + sigma_0^2) in m^2.
/// Throws DomainError when the SU or the base station sits within
/// kMinPathLossDistance of the emitter.
std::vector<double> range_variances_m2(const Scenario& scenario, const NoiseModel& noise);

/// Draws noisy range differences for the scenario's emitter. Noise disabled
/// yields the exact geometry and zero variances.
RangeDifferenceSet synthesize(const Scenario& scenario, const NoiseModel& noise, Rng& rng);

/// CSV with header `su_index,value_m,variance_m2`.
void write_range_differences_csv(std::ostream& out, const RangeDifferenceSet& set);

}  // namespace swarmloc
