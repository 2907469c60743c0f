#include <algorithm>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "swarmloc/errors.hpp"
#include "swarmloc/objective.hpp"

namespace swarmloc {
namespace {

LocalizationObjective zero_noise_objective(int n, std::uint64_t seed, Point emitter) {
  DeployConfig cfg;
  cfg.n_sus = n;
  cfg.seed = seed;
  const Scenario s = deploy_network(cfg).with_emitter(emitter);
  NoiseModel noise;
  noise.noise_enabled = false;
  Rng rng(seed);
  return LocalizationObjective::from_scenario(s, synthesize(s, noise, rng));
}

TEST(Fitness, VanishesAtTruthWithoutNoise) {
  Rng rng(5);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Point e{uniform(rng, -15000, 15000), uniform(rng, -15000, 15000)};
    const auto obj = zero_noise_objective(25, seed, e);
    const double scale = 15000.0;
    EXPECT_LT(obj.fitness(e), 1e-9 * 25 * scale * scale);
    EXPECT_GT(obj.fitness(e + Point{50, -20}), 0.0);
  }
}

TEST(Fitness, PositiveAtTruthWithNoise) {
  DeployConfig cfg;
  cfg.n_sus = 25;
  const Scenario s = deploy_network(cfg).with_emitter({8000, 1000});
  Rng rng(8);
  const auto obj = LocalizationObjective::from_scenario(s, synthesize(s, {}, rng));
  EXPECT_GT(obj.fitness({8000, 1000}), 1e-9 * 25 * 15000.0 * 15000.0);
}

TEST(Fitness, SingleAnchorSymmetryLocus) {
  const LocalizationObjective obj({{2000, 0}}, {0, 0}, {{0.0}, {1.0}});
  EXPECT_NEAR(obj.fitness({1000, 777}), 0.0, 1e-18);
  EXPECT_NEAR(obj.fitness({1000, -5000}), 0.0, 1e-12);
}

TEST(Fitness, HandEvaluatedExample) {
  const LocalizationObjective obj({{0, 10000}}, {0, 0}, {{3979.33}, {1.0}});
  // (3979.33 - 10000 + 0)^2
  EXPECT_NEAR(obj.fitness({0, 0}), 36248467.2489, 1e-3);
  EXPECT_NEAR(obj.fitness({0, 0}), 3.6248e7, 1e3);
}

TEST(Fitness, NonNegativeAndFinite) {
  DeployConfig cfg;
  cfg.n_sus = 10;
  const Scenario s = deploy_network(cfg).with_emitter({-3000, 7000});
  Rng rng(9);
  const auto obj = LocalizationObjective::from_scenario(s, synthesize(s, {}, rng));
  for (int i = 0; i < 5000; ++i) {
    const double f = obj.fitness({uniform(rng, -2e5, 2e5), uniform(rng, -2e5, 2e5)});
    EXPECT_GE(f, 0.0);
    EXPECT_TRUE(std::isfinite(f));
  }
}

TEST(Fitness, ShiftingOneMeasurementChangesOneTerm) {
  DeployConfig cfg;
  cfg.n_sus = 12;
  const Scenario s = deploy_network(cfg).with_emitter({8000, 1000});
  Rng rng(10);
  const RangeDifferenceSet base = synthesize(s, {}, rng);
  const LocalizationObjective obj = LocalizationObjective::from_scenario(s, base);
  for (int trial = 0; trial < 50; ++trial) {
    const Point c{uniform(rng, -20000, 20000), uniform(rng, -20000, 20000)};
    const std::size_t i = static_cast<std::size_t>(trial) % base.size();
    const double delta = uniform(rng, -500, 500);
    RangeDifferenceSet shifted = base;
    shifted.values[i] += delta;
    const LocalizationObjective moved = LocalizationObjective::from_scenario(s, shifted);
    const double r = obj.residuals(c)[static_cast<Eigen::Index>(i)];
    const double expected = (r + delta) * (r + delta) - r * r;
    EXPECT_NEAR(moved.fitness(c) - obj.fitness(c), expected, 1e-6 * std::max(1.0, obj.fitness(c)));
  }
}

TEST(Fitness, InvariantUnderSuRelabeling) {
  DeployConfig cfg;
  cfg.n_sus = 15;
  const Scenario s = deploy_network(cfg).with_emitter({8000, 1000});
  Rng rng(12);
  const RangeDifferenceSet rds = synthesize(s, {}, rng);
  std::vector<std::size_t> perm(15);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Point> anchors;
  RangeDifferenceSet permuted;
  for (std::size_t k : perm) {
    anchors.push_back(s.sus[k]);
    permuted.values.push_back(rds.values[k]);
    permuted.variances_m2.push_back(rds.variances_m2[k]);
  }
  const LocalizationObjective a(s.sus, s.bs, rds);
  const LocalizationObjective b(anchors, s.bs, permuted);
  for (int i = 0; i < 100; ++i) {
    const Point c{uniform(rng, -30000, 30000), uniform(rng, -30000, 30000)};
    EXPECT_NEAR(a.fitness(c), b.fitness(c), 1e-9 * a.fitness(c));
  }
}

TEST(Fitness, WeightedDividesByVariance) {
  const LocalizationObjective w({{0, 10000}, {5000, 0}}, {0, 0}, {{100.0, -50.0}, {4.0, 25.0}}, true);
  const LocalizationObjective u({{0, 10000}, {5000, 0}}, {0, 0}, {{100.0, -50.0}, {4.0, 25.0}}, false);
  const Point c{1000, 2000};
  const Eigen::VectorXd r = u.residuals(c);
  EXPECT_NEAR(w.fitness(c), r[0] * r[0] / 4.0 + r[1] * r[1] / 25.0, 1e-9);
  EXPECT_NEAR(u.fitness(c), r.squaredNorm(), 1e-6);
}

TEST(Fitness, WeightingFallsBackToIdentityOnZeroVariance) {
  const LocalizationObjective w({{0, 10000}, {5000, 0}}, {0, 0}, {{100.0, -50.0}, {0.0, 0.0}}, true);
  EXPECT_EQ(w.weights(), Eigen::VectorXd::Ones(2));
}

TEST(Objective, RejectsMismatchedSizes) {
  EXPECT_THROW(LocalizationObjective({}, {0, 0}, {}), UsageError);
  EXPECT_THROW(LocalizationObjective({{1, 1}}, {0, 0}, {{1.0, 2.0}, {}}), UsageError);
}

TEST(Jacobian, RowsBoundedByTwo) {
  const auto obj = zero_noise_objective(30, 4, {8000, 1000});
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const Jacobian J = obj.jacobian({uniform(rng, -5e4, 5e4), uniform(rng, -5e4, 5e4)});
    for (Eigen::Index r = 0; r < J.rows(); ++r) EXPECT_LE(J.row(r).norm(), 2.0 + 1e-12);
  }
}

TEST(Jacobian, MatchesCentralDifferences) {
  const auto obj = zero_noise_objective(20, 6, {8000, 1000});
  Rng rng(13);
  const double h = 0.01;
  for (int i = 0; i < 100; ++i) {
    const Point p{uniform(rng, -30000, 30000), uniform(rng, -30000, 30000)};
    const Jacobian J = obj.jacobian(p);
    const Eigen::VectorXd dx = (obj.model(p + Point{h, 0}) - obj.model(p - Point{h, 0})) / (2 * h);
    const Eigen::VectorXd dy = (obj.model(p + Point{0, h}) - obj.model(p - Point{0, h})) / (2 * h);
    for (Eigen::Index r = 0; r < J.rows(); ++r) {
      EXPECT_NEAR(J(r, 0), dx[r], 1e-6 * std::max(1.0, std::abs(J(r, 0))));
      EXPECT_NEAR(J(r, 1), dy[r], 1e-6 * std::max(1.0, std::abs(J(r, 1))));
    }
  }
}

TEST(Jacobian, MirrorSymmetricLayout) {
  // SU at (0, 2000), BS at origin; p on the bisector y = 1000 at x = 0
  const LocalizationObjective obj({{0, 2000}}, {0, 0}, {{0.0}, {1.0}});
  const Jacobian J = obj.jacobian({0, 1000});
  EXPECT_NEAR(J(0, 0), 0.0, 1e-15);
  EXPECT_NEAR(J(0, 1), -2.0, 1e-15);
}

TEST(Jacobian, RejectsCoincidentPoint) {
  const LocalizationObjective obj({{100, 200}, {300, 0}}, {0, 0}, {{0.0, 0.0}, {1.0, 1.0}});
  EXPECT_THROW(obj.jacobian({100, 200}), DomainError);
  EXPECT_THROW(obj.jacobian({0, 0}), DomainError);
}

}  // namespace
}  // namespace swarmloc
