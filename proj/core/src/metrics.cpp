#include "swarmloc/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "swarmloc/errors.hpp"

namespace swarmloc {

Point mean_position(const TrialErrorSet& s) {
  if (s.estimates.empty()) throw UsageError("mean_position: empty estimate set");
  Point sum;
  for (const Point& p : s.estimates) sum = sum + p;
  return sum * (1.0 / static_cast<double>(s.estimates.size()));
}

double mse(const TrialErrorSet& s) {
  if (s.estimates.empty()) throw UsageError("mse: empty estimate set");
  double sum = 0.0;
  for (const Point& p : s.estimates) {
    const Point d = p - s.truth;
    sum += d.x * d.x + d.y * d.y;
  }
  return sum / static_cast<double>(s.estimates.size());
}

ErrorStats error_stats(const TrialErrorSet& s) {
  ErrorStats st;
  st.mse = mse(s);
  st.rms = std::sqrt(st.mse);
  const Point bias = mean_position(s) - s.truth;
  st.bias2 = bias.x * bias.x + bias.y * bias.y;
  st.n = s.estimates.size();
  return st;
}

std::vector<CdfPoint> cdf_curve(std::span<const double> errors) {
  if (errors.empty()) throw UsageError("cdf_curve: empty error list");
  std::vector<double> sorted(errors.begin(), errors.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  std::vector<CdfPoint> out;
  out.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    // duplicates collapse onto the last occurrence so F counts every e <= z
    if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
    out.push_back({sorted[i], static_cast<double>(i + 1) / n});
  }
  out.back().F = 1.0;
  return out;
}

double cdf_median(std::span<const CdfPoint> curve) {
  if (curve.empty()) throw UsageError("cdf_median: empty curve");
  for (const CdfPoint& c : curve)
    if (c.F >= 0.5) return c.z;
  return curve.back().z;
}

std::vector<double> position_errors(const TrialErrorSet& s) {
  std::vector<double> out;
  out.reserve(s.estimates.size());
  for (const Point& p : s.estimates) out.push_back(distance(p, s.truth));
  return out;
}

}  // namespace swarmloc
