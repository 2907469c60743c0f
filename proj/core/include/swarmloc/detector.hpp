#pragma once

#include <optional>
#include <string>

#include "swarmloc/geometry.hpp"
#include "swarmloc/scenario.hpp"

namespace swarmloc {

enum class Verdict { PU, PUEA };

std::string to_string(Verdict v);

struct DetectionDecision {
  Verdict verdict = Verdict::PU;
  Point estimate;
  double distance_to_pu = 0.0;
  std::optional<std::size_t> suspect_su;
  std::optional<double> distance_to_suspect;
};

struct DetectorThresholds {
  double pu_threshold = 1000.0;  // m
  double su_threshold = 1000.0;  // m
};

/// PU when the estimate lies within pu_threshold of the tower (inclusive),
/// PUEA otherwise. For PUEA the nearest SU within su_threshold is named as
/// the suspect; ties go to the lowest index.
DetectionDecision classify(const Point& estimate, const Scenario& scenario,
                           const DetectorThresholds& thresholds = {});

/// One-line JSON object.
std::string to_json(const DetectionDecision& d);

}  // namespace swarmloc
