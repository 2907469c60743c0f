#include "swarmloc/measurement.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <ostream>
#include <string>

#include "swarmloc/errors.hpp"
#include "swarmloc/report.hpp"

namespace swarmloc {

void NoiseModel::validate() const {
  if (!(bandwidth_hz > 0.0)) throw ConfigError("bandwidth_hz", "must be positive");
  if (!(antenna_height_m > 0.0)) throw ConfigError("antenna_height", "must be positive");
  if (!std::isfinite(snr0_db)) throw ConfigError("snr0_db", "must be finite");
}

std::uint64_t RangeDifferenceSet::content_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::vector<double>& v) {
    for (double d : v) {
      unsigned char bytes[sizeof(double)];
      std::memcpy(bytes, &d, sizeof d);
      for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
      }
    }
  };
  feed(values);
  feed(variances_m2);
  return h;
}

double true_range_difference(const Point& emitter, const Point& su, const Point& bs) {
  return distance(emitter, su) - distance(emitter, bs);
}

double path_loss_delta_db(double d_i, double d_0, double antenna_height_m) {
  if (!(d_i > 0.0) || !(d_0 > 0.0) || !(antenna_height_m > 0.0))
    throw DomainError("path loss: distances and antenna height must be positive");
  return (44.9 - 6.55 * std::log10(antenna_height_m)) * std::log10(d_i / d_0);
}

double toa_variance_s2(double bandwidth_hz, double snr_linear) {
  if (!(bandwidth_hz > 0.0)) throw DomainError("toa variance: bandwidth must be positive");
  if (!(snr_linear > 0.0)) throw DomainError("toa variance: SNR must be positive");
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  return 1.0 / (8.0 * pi2 * bandwidth_hz * bandwidth_hz * snr_linear);
}

std::vector<double> range_variances_m2(const Scenario& scenario, const NoiseModel& noise) {
  if (!scenario.emitter) throw UsageError("synthesize: emitter position is not set");
  const Point e = *scenario.emitter;
  const double d0 = distance(e, scenario.bs);
  if (d0 < kMinPathLossDistance)
    throw DomainError("synthesize: emitter coincides with the base station");

  constexpr double c2 = kSpeedOfLight * kSpeedOfLight;
  const double sigma0_s2 = toa_variance_s2(noise.bandwidth_hz, db_to_linear(noise.snr0_db));

  std::vector<double> out;
  out.reserve(scenario.sus.size());
  for (std::size_t i = 0; i < scenario.sus.size(); ++i) {
    const double di = distance(e, scenario.sus[i]);
    if (di < kMinPathLossDistance)
      throw DomainError("synthesize: SU " + std::to_string(i) + " coincides with the emitter");
    const double snr_db = snr_at_su_db(noise.snr0_db, path_loss_delta_db(di, d0, noise.antenna_height_m));
    const double sigma_i_s2 = toa_variance_s2(noise.bandwidth_hz, db_to_linear(snr_db));
    out.push_back(c2 * (sigma_i_s2 + sigma0_s2));
  }
  return out;
}

RangeDifferenceSet synthesize(const Scenario& scenario, const NoiseModel& noise, Rng& rng) {
  noise.validate();
  if (!scenario.emitter) throw UsageError("synthesize: emitter position is not set");
  if (scenario.sus.empty()) throw UsageError("synthesize: scenario has no SUs");
  const Point e = *scenario.emitter;

  RangeDifferenceSet out;
  out.values.reserve(scenario.sus.size());
  for (const Point& su : scenario.sus) out.values.push_back(true_range_difference(e, su, scenario.bs));

  if (!noise.noise_enabled) {
    out.variances_m2.assign(scenario.sus.size(), 0.0);
    return out;
  }
  out.variances_m2 = range_variances_m2(scenario, noise);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] += std::sqrt(out.variances_m2[i]) * gauss(rng);
  return out;
}

void write_range_differences_csv(std::ostream& out, const RangeDifferenceSet& set) {
  out << "su_index,value_m,variance_m2\n";
  for (std::size_t i = 0; i < set.size(); ++i)
    out << i << ',' << format_double(set.values[i]) << ',' << format_double(set.variances_m2[i]) << '\n';
}

}  // namespace swarmloc
