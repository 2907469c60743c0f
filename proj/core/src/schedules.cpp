#include "swarmloc/schedules.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "swarmloc/errors.hpp"

namespace swarmloc {

std::string to_string(InertiaLabel l) { return "W" + std::to_string(static_cast<int>(l)); }

std::string to_string(AccelLabel l) { return "A" + std::to_string(static_cast<int>(l) + 1); }

InertiaLabel parse_inertia_label(std::string_view s) {
  for (int i = 0; i < kInertiaLabelCount; ++i) {
    const auto l = static_cast<InertiaLabel>(i);
    if (s == to_string(l)) return l;
  }
  throw UsageError("unknown inertia schedule '" + std::string(s) + "'");
}

AccelLabel parse_accel_label(std::string_view s) {
  for (int i = 0; i < kAccelLabelCount; ++i) {
    const auto l = static_cast<AccelLabel>(i);
    if (s == to_string(l)) return l;
  }
  throw UsageError("unknown acceleration schedule '" + std::string(s) + "'");
}

double inertia_weight(const InertiaSchedule& s, int t, int T, ScheduleState& state) {
  if (T < 1 || t < 0 || t > T) throw UsageError("inertia_weight: requires 0 <= t <= T, T >= 1");
  const double frac = static_cast<double>(t) / T;
  const double span = s.w_max - s.w_min;

  switch (s.label) {
    case InertiaLabel::W0:
      return s.w_max;
    case InertiaLabel::W1:
      return s.w_max - span * frac;
    case InertiaLabel::W2:
      return 0.5 + uniform01(state.rng) / 2.0;
    case InertiaLabel::W3:
      // exponent clamped at zero so the first iteration does not exceed w_max
      return s.w_min + span * std::pow(0.95, std::max(t - 1, 0));
    case InertiaLabel::W4:
      return s.w_max + (s.w_min - s.w_max) * std::log10(s.alpha + 10.0 * frac);
    case InertiaLabel::W5:
      return (s.w_min + s.w_max) / 2.0 + (s.w_min - s.w_max) / 2.0 * std::cos(2.0 * std::numbers::pi * frac);
    case InertiaLabel::W6:
      return s.w_min + span * std::exp(-10.0 * frac);
    case InertiaLabel::W7:
      state.chaos = logistic_step(state.chaos);
      return span * (1.0 - frac) + s.w_min * state.chaos;
    case InertiaLabel::W8:
      return std::pow(1.0 - frac, s.nonlinear_n) * span + s.w_min;
    case InertiaLabel::W9:
      return (1.0 - frac) / (1.0 - s.sugeno_s * frac);
    case InertiaLabel::W10:
      return s.growth_initial * std::pow(s.growth_u, t);
    case InertiaLabel::W11:
      return s.exp_initial * std::exp(-s.exp_a * std::pow(frac, s.exp_b));
    case InertiaLabel::W12: {
      state.chaos = logistic_step(state.chaos);
      return uniform01(state.rng) / 2.0 + state.chaos / 2.0;
    }
  }
  throw UsageError("inertia_weight: unknown label");
}

AccelCoeffs accel_coeffs(AccelLabel label, int t, int T) {
  if (T < 1 || t < 0 || t > T) throw UsageError("accel_coeffs: requires 0 <= t <= T, T >= 1");
  const double frac = static_cast<double>(t) / T;
  switch (label) {
    case AccelLabel::A1:
      return {2.0, 2.0};
    case AccelLabel::A2:
      return {-2.05 * frac + 2.55, frac + 1.25};
    case AccelLabel::A3:
      return {2.5 + 2.0 * frac * frac - 4.0 * frac, 0.5 - 2.0 * frac * frac + 4.0 * frac};
  }
  throw UsageError("accel_coeffs: unknown label");
}

const std::vector<VariantSpec>& variant_table() {
  static const std::vector<VariantSpec> table = [] {
    std::vector<VariantSpec> v;
    const std::pair<const char*, AccelLabel> families[] = {
        {"PSO", AccelLabel::A1}, {"MPSO", AccelLabel::A2}, {"IPSO", AccelLabel::A3}};
    for (const auto& [prefix, accel] : families) {
      for (int w = 0; w < kInertiaLabelCount; ++w) {
        std::string name = prefix;
        if (w > 0) name += std::to_string(w);
        v.push_back({std::move(name), static_cast<InertiaLabel>(w), accel});
      }
    }
    return v;
  }();
  return table;
}

const VariantSpec& find_variant(std::string_view name) {
  const auto& table = variant_table();
  auto it = std::find_if(table.begin(), table.end(), [&](const VariantSpec& v) { return v.name == name; });
  if (it == table.end()) throw UsageError("unknown variant '" + std::string(name) + "'");
  return *it;
}

std::vector<VariantSpec> resolve_variants(std::string_view list) {
  if (list == "all") return variant_table();
  std::vector<VariantSpec> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    std::string_view item = list.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.push_back(find_variant(item));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (out.empty()) throw UsageError("empty variant list");
  return out;
}

}  // namespace swarmloc
