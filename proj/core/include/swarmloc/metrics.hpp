#pragma once

#include <span>
#include <utility>
#include <vector>

#include "swarmloc/geometry.hpp"

namespace swarmloc {

struct TrialErrorSet {
  std::vector<Point> estimates;
  Point truth;
};

struct ErrorStats {
  double mse = 0.0;    // mean squared distance to truth, m^2
  double rms = 0.0;    // sqrt(mse), m
  double bias2 = 0.0;  // squared distance of the mean estimate to truth, m^2
  std::size_t n = 0;
};

/// Throws UsageError on an empty set.
Point mean_position(const TrialErrorSet& s);
double mse(const TrialErrorSet& s);
ErrorStats error_stats(const TrialErrorSet& s);

struct CdfPoint {
  double z;
  double F;
};

/// Empirical CDF at the sorted sample values; F(z) = #{e <= z} / n.
std::vector<CdfPoint> cdf_curve(std::span<const double> errors);

/// Smallest sample z with F(z) >= 0.5.
double cdf_median(std::span<const CdfPoint> curve);

/// Distances |estimate - truth|.
std::vector<double> position_errors(const TrialErrorSet& s);

}  // namespace swarmloc
