#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "swarmloc/geometry.hpp"

namespace swarmloc {

/// Deployment parameters for a cognitive radio network: a base station at the
/// origin, SUs scattered uniformly over a square, and a TV tower outside it.
struct DeployConfig {
  int n_sus = 100;
  double half_width = 15'000.0;
  double pu_distance = 60'000.0;
  double pu_bearing = 0.0;  // radians, 0 = due east
  std::uint64_t seed = 1;

  static constexpr double kMinPuDistance = 30'000.0;
  static constexpr double kMaxPuDistance = 100'000.0;

  /// Throws ConfigError naming the first offending field.
  void validate() const;
};

/// Node positions of one network. SU index i identifies the same node for the
/// lifetime of the value.
struct Scenario {
  Point bs;
  std::vector<Point> sus;
  Point pu;
  std::optional<Point> emitter;
  double half_width = 0.0;

  std::size_t su_count() const { return sus.size(); }

  /// Copy with the transmitter placed at `p`.
  Scenario with_emitter(Point p) const;
};

Scenario deploy_network(const DeployConfig& cfg);

/// Flat CSV with header `role,index,x,y`; one row per node (bs, su..., pu and
/// emitter when set).
void write_scenario_csv(std::ostream& out, const Scenario& s);

/// Parses the output of write_scenario_csv. The half width is recovered as
/// the smallest square around the base station that holds every SU.
Scenario read_scenario_csv(std::istream& in);

}  // namespace swarmloc
