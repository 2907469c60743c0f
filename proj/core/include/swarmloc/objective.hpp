#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "swarmloc/geometry.hpp"
#include "swarmloc/measurement.hpp"
#include "swarmloc/scenario.hpp"

namespace swarmloc {

using Jacobian = Eigen::Matrix<double, Eigen::Dynamic, 2>;

/// Nonlinear least-squares TDOA cost
///
///   f(p) = sum_i ( dhat_i - |p - s_i| + |p - b| )^2
///
/// over SU anchors s_i and reference b. The optional weighted form divides
/// each squared residual by the measurement variance; it is meant for the
/// Gauss-Newton baseline, the swarm optimizers use the unweighted sum.
class LocalizationObjective {
 public:
  LocalizationObjective(std::vector<Point> anchors, Point ref, RangeDifferenceSet measurements,
                        bool weighted = false);

  static LocalizationObjective from_scenario(const Scenario& s, RangeDifferenceSet measurements,
                                             bool weighted = false);

  double fitness(const Point& candidate) const;

  /// Unsquared residuals dhat_i - (|p - s_i| - |p - b|).
  Eigen::VectorXd residuals(const Point& p) const;

  /// Model range differences |p - s_i| - |p - b|.
  Eigen::VectorXd model(const Point& p) const;

  /// Gradient of the model range differences with respect to p; row i is
  /// the unit vector from s_i toward p minus the unit vector from b toward
  /// p. The residual Jacobian is its negation. Throws DomainError when p
  /// coincides with an anchor or the reference.
  Jacobian jacobian(const Point& p) const;

  /// Diagonal weights: inverse variances when weighting is on and every
  /// variance is positive, ones otherwise.
  Eigen::VectorXd weights() const;

  std::size_t size() const { return anchors_.size(); }
  bool weighted() const { return weighted_; }
  std::span<const Point> anchors() const { return anchors_; }
  const Point& ref() const { return ref_; }
  const RangeDifferenceSet& measurements() const { return measurements_; }

 private:
  std::vector<Point> anchors_;
  Point ref_;
  RangeDifferenceSet measurements_;
  std::vector<double> inv_var_;
  bool weighted_ = false;
};

}  // namespace swarmloc
