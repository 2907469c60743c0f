#include "swarmloc/detector.hpp"

#include "json.hpp"

#include "swarmloc/errors.hpp"

namespace swarmloc {

std::string to_string(Verdict v) { return v == Verdict::PU ? "PU" : "PUEA"; }

DetectionDecision classify(const Point& estimate, const Scenario& scenario,
                           const DetectorThresholds& thresholds) {
  if (!(thresholds.pu_threshold > 0.0) || !(thresholds.su_threshold > 0.0))
    throw UsageError("classify: thresholds must be positive");

  DetectionDecision d;
  d.estimate = estimate;
  d.distance_to_pu = distance(estimate, scenario.pu);
  if (d.distance_to_pu <= thresholds.pu_threshold) {
    d.verdict = Verdict::PU;
    return d;
  }
  d.verdict = Verdict::PUEA;
  for (std::size_t i = 0; i < scenario.sus.size(); ++i) {
    const double di = distance(estimate, scenario.sus[i]);
    if (di <= thresholds.su_threshold && (!d.distance_to_suspect || di < *d.distance_to_suspect)) {
      d.suspect_su = i;
      d.distance_to_suspect = di;
    }
  }
  return d;
}

std::string to_json(const DetectionDecision& d) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(d.verdict);
  j["x"] = d.estimate.x;
  j["y"] = d.estimate.y;
  j["distance_to_pu"] = d.distance_to_pu;
  j["suspect_su"] = d.suspect_su ? nlohmann::ordered_json(*d.suspect_su) : nlohmann::ordered_json(nullptr);
  j["distance_to_suspect"] =
      d.distance_to_suspect ? nlohmann::ordered_json(*d.distance_to_suspect) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

}  // namespace swarmloc
