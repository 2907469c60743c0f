#include "swarmloc/objective.hpp"

#include <string>

#include "swarmloc/errors.hpp"

namespace swarmloc {

namespace {
// Closer than this to an anchor the gradient of |p - s| is undefined.
constexpr double kCoincidence = 1e-9;
}  // namespace

LocalizationObjective::LocalizationObjective(std::vector<Point> anchors, Point ref,
                                             RangeDifferenceSet measurements, bool weighted)
    : anchors_(std::move(anchors)),
      ref_(ref),
      measurements_(std::move(measurements)),
      weighted_(weighted) {
  if (anchors_.empty()) throw UsageError("objective: needs at least one anchor");
  if (anchors_.size() != measurements_.values.size())
    throw UsageError("objective: anchor count does not match measurement count");
  if (!measurements_.variances_m2.empty() &&
      measurements_.variances_m2.size() != measurements_.values.size())
    throw UsageError("objective: variance count does not match measurement count");

  inv_var_.assign(anchors_.size(), 1.0);
  if (weighted_ && !measurements_.variances_m2.empty()) {
    bool all_positive = true;
    for (double v : measurements_.variances_m2) all_positive = all_positive && v > 0.0;
    if (all_positive)
      for (std::size_t i = 0; i < inv_var_.size(); ++i) inv_var_[i] = 1.0 / measurements_.variances_m2[i];
  }
}

LocalizationObjective LocalizationObjective::from_scenario(const Scenario& s,
                                                           RangeDifferenceSet measurements,
                                                           bool weighted) {
  return LocalizationObjective(s.sus, s.bs, std::move(measurements), weighted);
}

double LocalizationObjective::fitness(const Point& c) const {
  const double d0 = distance(c, ref_);
  const double* dhat = measurements_.values.data();
  double sum = 0.0;
  if (weighted_) {
    for (std::size_t i = 0; i < anchors_.size(); ++i) {
      const double r = dhat[i] - distance(c, anchors_[i]) + d0;
      sum += inv_var_[i] * r * r;
    }
  } else {
    for (std::size_t i = 0; i < anchors_.size(); ++i) {
      const double r = dhat[i] - distance(c, anchors_[i]) + d0;
      sum += r * r;
    }
  }
  return sum;
}

Eigen::VectorXd LocalizationObjective::model(const Point& p) const {
  const double d0 = distance(p, ref_);
  Eigen::VectorXd h(static_cast<Eigen::Index>(anchors_.size()));
  for (std::size_t i = 0; i < anchors_.size(); ++i)
    h[static_cast<Eigen::Index>(i)] = distance(p, anchors_[i]) - d0;
  return h;
}

Eigen::VectorXd LocalizationObjective::residuals(const Point& p) const {
  const Eigen::Map<const Eigen::VectorXd> dhat(measurements_.values.data(),
                                               static_cast<Eigen::Index>(measurements_.values.size()));
  return dhat - model(p);
}

Jacobian LocalizationObjective::jacobian(const Point& p) const {
  const double d0 = distance(p, ref_);
  if (d0 < kCoincidence) throw DomainError("jacobian: point coincides with the reference");
  const Point u0 = (p - ref_) * (1.0 / d0);
  Jacobian J(static_cast<Eigen::Index>(anchors_.size()), 2);
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    const double di = distance(p, anchors_[i]);
    if (di < kCoincidence)
      throw DomainError("jacobian: point coincides with anchor " + std::to_string(i));
    const Point ui = (p - anchors_[i]) * (1.0 / di);
    J(static_cast<Eigen::Index>(i), 0) = ui.x - u0.x;
    J(static_cast<Eigen::Index>(i), 1) = ui.y - u0.y;
  }
  return J;
}

Eigen::VectorXd LocalizationObjective::weights() const {
  return Eigen::Map<const Eigen::VectorXd>(inv_var_.data(), static_cast<Eigen::Index>(inv_var_.size()));
}

}  // namespace swarmloc
