#include "swarmloc/tse.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "swarmloc/errors.hpp"

namespace swarmloc {

void TseConfig::validate() const {
  if (max_iterations < 1) throw ConfigError("tse_max_iterations", "must be >= 1");
  if (!(step_tolerance > 0.0)) throw ConfigError("tse_step_tolerance", "must be positive");
  if (initial_guess && !is_finite(*initial_guess)) throw ConfigError("tse_initial_guess", "must be finite");
}

Point centroid(std::span<const Point> points) {
  if (points.empty()) throw UsageError("centroid: no points");
  Point sum;
  for (const Point& p : points) sum = sum + p;
  return sum * (1.0 / static_cast<double>(points.size()));
}

TseResult tse_solve(const LocalizationObjective& obj, const TseConfig& cfg) {
  cfg.validate();
  if (obj.size() < 2) throw UsageError("tse_solve: needs at least two range differences");

  const Eigen::VectorXd w = cfg.weighting ? obj.weights() : Eigen::VectorXd::Ones(static_cast<Eigen::Index>(obj.size()));
  TseResult result;
  Point p = cfg.initial_guess.value_or(centroid(obj.anchors()));

  for (int k = 0; k < cfg.max_iterations; ++k) {
    const Jacobian J = obj.jacobian(p);
    const Eigen::VectorXd r = obj.residuals(p);
    const Eigen::Matrix2d A = J.transpose() * w.asDiagonal() * J;
    const Eigen::Vector2d b = J.transpose() * (w.array() * r.array()).matrix();

    // relative to the squared Frobenius norm so the test is scale-free
    const double scale = A.squaredNorm();
    if (!(std::abs(A.determinant()) > 1e-12 * scale))
      throw DegeneracyError("tse_solve: singular normal matrix (degenerate geometry)");
    const Eigen::Vector2d delta = A.inverse() * b;

    p = p + Point{delta.x(), delta.y()};
    result.iterations_used = k + 1;
    if (!is_finite(p)) throw DivergenceError("tse_solve: non-finite iterate");
    if (delta.norm() < cfg.step_tolerance) {
      result.converged = true;
      break;
    }
  }
  result.estimate = p;
  return result;
}

}  // namespace swarmloc
