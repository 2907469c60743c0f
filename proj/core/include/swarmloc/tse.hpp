#pragma once

#include <optional>

#include "swarmloc/geometry.hpp"
#include "swarmloc/objective.hpp"

namespace swarmloc {

/// Taylor-series (Gauss-Newton) TDOA solver settings. With no initial guess
/// the centroid of the SU positions is used.
struct TseConfig {
  std::optional<Point> initial_guess;
  int max_iterations = 20;
  double step_tolerance = 0.01;  // m
  bool weighting = true;

  void validate() const;
};

struct TseResult {
  Point estimate;
  bool converged = false;
  int iterations_used = 0;
};

Point centroid(std::span<const Point> points);

/// Undamped Gauss-Newton on the range-difference residuals:
///   p <- p + (J^T W J)^-1 J^T W r
/// W holds inverse variances when cfg.weighting is set (and the objective
/// carries positive variances), identity otherwise. Throws DegeneracyError on
/// a singular normal matrix and DivergenceError on a non-finite iterate.
TseResult tse_solve(const LocalizationObjective& obj, const TseConfig& cfg = {});

}  // namespace swarmloc
