#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swarmloc/random.hpp"

namespace swarmloc {

/// Inertia weight strategies W0..W12.
enum class InertiaLabel {
  W0, W1, W2, W3, W4, W5, W6, W7, W8, W9, W10, W11, W12,
};

/// Acceleration coefficient strategies: A1 fixed, A2 linear time-varying,
/// A3 quadratic mirror-symmetric.
enum class AccelLabel { A1, A2, A3 };

inline constexpr int kInertiaLabelCount = 13;
inline constexpr int kAccelLabelCount = 3;

std::string to_string(InertiaLabel l);
std::string to_string(AccelLabel l);
/// Throws UsageError on an unknown label.
InertiaLabel parse_inertia_label(std::string_view s);
AccelLabel parse_accel_label(std::string_view s);

struct InertiaSchedule {
  InertiaLabel label = InertiaLabel::W0;
  double w_max = 0.9;
  double w_min = 0.4;
  double chaos_seed = 0.3;       // W7, W12
  double alpha = 1.0;            // W4
  double nonlinear_n = 0.7;      // W8
  double sugeno_s = -0.7;        // W9
  double growth_initial = 0.1;   // W10
  double growth_u = 1.00002;     // W10
  double exp_initial = 0.4;      // W11
  double exp_a = 2.0;            // W11
  double exp_b = 1.5;            // W11
};

/// Per-run mutable schedule state: the logistic-map value for W7/W12 and a
/// dedicated stream for the W2/W12 random draws.
struct ScheduleState {
  double chaos;
  Rng rng;

  ScheduleState(double chaos_seed, Rng rng_in) : chaos(chaos_seed), rng(std::move(rng_in)) {}
};

/// One logistic-map step c <- 4c(1 - c).
inline double logistic_step(double c) { return 4.0 * c * (1.0 - c); }

/// w(t) for 0 <= t <= T (0-based t). W7 and W12 advance state.chaos exactly
/// once per call; W2 and W12 draw exactly one uniform sample.
double inertia_weight(const InertiaSchedule& s, int t, int T, ScheduleState& state);

struct AccelCoeffs {
  double c1;
  double c2;
};

AccelCoeffs accel_coeffs(AccelLabel label, int t, int T);

struct VariantSpec {
  std::string name;
  InertiaLabel inertia;
  AccelLabel accel;
};

/// The 39 named variants: PSO, PSO1..PSO12 (A1), MPSO.. (A2), IPSO.. (A3).
const std::vector<VariantSpec>& variant_table();

/// Throws UsageError on a name not in variant_table().
const VariantSpec& find_variant(std::string_view name);

/// Resolves a comma-separated list of variant names, or "all".
std::vector<VariantSpec> resolve_variants(std::string_view list);

}  // namespace swarmloc
