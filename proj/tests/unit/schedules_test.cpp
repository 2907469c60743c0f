#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "swarmloc/errors.hpp"
#include "swarmloc/schedules.hpp"

namespace swarmloc {
namespace {

double w_at(InertiaLabel label, int t, int T) {
  InertiaSchedule s;
  s.label = label;
  ScheduleState st(s.chaos_seed, Rng(1));
  return inertia_weight(s, t, T, st);
}

TEST(Inertia, Endpoints) {
  const int T = 150;
  for (int t : {0, 1, 75, 150}) EXPECT_EQ(w_at(InertiaLabel::W0, t, T), 0.9);
  EXPECT_NEAR(w_at(InertiaLabel::W1, 0, T), 0.9, 1e-12);
  EXPECT_NEAR(w_at(InertiaLabel::W1, T, T), 0.4, 1e-12);
  EXPECT_NEAR(w_at(InertiaLabel::W9, 0, T), 1.0, 1e-12);
  EXPECT_NEAR(w_at(InertiaLabel::W9, T, T), 0.0, 1e-12);
  // 0.4 + 0.5 e^-10
  EXPECT_NEAR(w_at(InertiaLabel::W6, T, T), 0.40002269996488127, 1e-12);
  EXPECT_NEAR(w_at(InertiaLabel::W5, 0, T), 0.4, 1e-12);
  EXPECT_NEAR(w_at(InertiaLabel::W4, 0, T), 0.9, 1e-12);
  // 0.9 - 0.5 log10(11)
  EXPECT_NEAR(w_at(InertiaLabel::W4, T, T), 0.37930365742088756, 1e-12);
  EXPECT_NEAR(w_at(InertiaLabel::W3, 0, T), 0.9, 1e-12);
  EXPECT_NEAR(w_at(InertiaLabel::W3, 1, T), 0.9, 1e-12);
  EXPECT_NEAR(w_at(InertiaLabel::W3, 2, T), 0.4 + 0.5 * 0.95, 1e-12);
  EXPECT_NEAR(w_at(InertiaLabel::W8, 0, T), 0.9, 1e-12);
  EXPECT_NEAR(w_at(InertiaLabel::W8, T, T), 0.4, 1e-12);
  EXPECT_NEAR(w_at(InertiaLabel::W10, 0, T), 0.1, 1e-15);
  EXPECT_NEAR(w_at(InertiaLabel::W10, 100, T), 0.1 * std::pow(1.00002, 100), 1e-15);
  EXPECT_NEAR(w_at(InertiaLabel::W11, 0, T), 0.4, 1e-15);
  EXPECT_NEAR(w_at(InertiaLabel::W11, T, T), 0.4 * std::exp(-2.0), 1e-15);
}

TEST(Inertia, DecreasingSchedulesAreMonotoneAndBounded) {
  for (InertiaLabel l : {InertiaLabel::W1, InertiaLabel::W3, InertiaLabel::W6, InertiaLabel::W8}) {
    for (int T : {1, 10, 150, 1000}) {
      double prev = w_at(l, 0, T);
      for (int t = 0; t <= T; ++t) {
        const double w = w_at(l, t, T);
        EXPECT_LE(w, prev + 1e-15) << to_string(l) << " t=" << t;
        EXPECT_GE(w, 0.4 - 1e-12);
        EXPECT_LE(w, 0.9 + 1e-12);
        prev = w;
      }
    }
  }
}

TEST(Inertia, OscillatingStaysInRange) {
  const int T = 150;
  for (int t = 0; t <= T; ++t) {
    const double w = w_at(InertiaLabel::W5, t, T);
    EXPECT_GE(w, 0.4 - 1e-12);
    EXPECT_LE(w, 0.9 + 1e-12);
  }
  EXPECT_NEAR(w_at(InertiaLabel::W5, T / 2, T), 0.9, 1e-12);
}

TEST(Inertia, RandomSchedulesRange) {
  InertiaSchedule w2;
  w2.label = InertiaLabel::W2;
  InertiaSchedule w12;
  w12.label = InertiaLabel::W12;
  ScheduleState a(0.3, Rng(5)), b(0.3, Rng(6));
  for (int i = 0; i < 100000; ++i) {
    const double x = inertia_weight(w2, 3, 150, a);
    EXPECT_GE(x, 0.5);
    EXPECT_LT(x, 1.0);
    const double y = inertia_weight(w12, 3, 150, b);
    EXPECT_GE(y, 0.0);
    EXPECT_LT(y, 1.0);
  }
}

TEST(Inertia, RandomSchedulesDrawOncePerCall) {
  InertiaSchedule s;
  s.label = InertiaLabel::W2;
  ScheduleState st(0.3, Rng(9));
  Rng mirror(9);
  for (int i = 0; i < 10; ++i) {
    const double w = inertia_weight(s, i, 150, st);
    EXPECT_EQ(w, 0.5 + uniform01(mirror) / 2.0);
  }
}

TEST(Inertia, ChaoticAdvancesOncePerCall) {
  InertiaSchedule s;
  s.label = InertiaLabel::W7;
  ScheduleState st(0.3, Rng(1));
  double c = 0.3;
  for (int t = 0; t <= 20; ++t) {
    const double w = inertia_weight(s, t, 20, st);
    c = logistic_step(c);
    EXPECT_EQ(st.chaos, c);
    EXPECT_NEAR(w, 0.5 * (20.0 - t) / 20.0 + 0.4 * c, 1e-15);
  }
  EXPECT_NEAR(logistic_step(0.3), 0.84, 1e-15);
}

TEST(Inertia, LogisticMapStaysInOpenUnitInterval) {
  double c = 0.3;
  for (int i = 0; i < 1000000; ++i) {
    c = logistic_step(c);
    ASSERT_GT(c, 0.0) << "step " << i;
    ASSERT_LT(c, 1.0) << "step " << i;
  }
}

TEST(Inertia, RejectsOutOfRangeIteration) {
  EXPECT_THROW(w_at(InertiaLabel::W1, -1, 10), UsageError);
  EXPECT_THROW(w_at(InertiaLabel::W1, 11, 10), UsageError);
  EXPECT_THROW(w_at(InertiaLabel::W1, 0, 0), UsageError);
}

TEST(Labels, ParseRoundTripAndUnknown) {
  for (int i = 0; i < kInertiaLabelCount; ++i) {
    const auto l = static_cast<InertiaLabel>(i);
    EXPECT_EQ(parse_inertia_label(to_string(l)), l);
  }
  for (int i = 0; i < kAccelLabelCount; ++i) {
    const auto l = static_cast<AccelLabel>(i);
    EXPECT_EQ(parse_accel_label(to_string(l)), l);
  }
  EXPECT_THROW(parse_inertia_label("W13"), UsageError);
  EXPECT_THROW(parse_accel_label("A4"), UsageError);
}

TEST(Accel, Endpoints) {
  const int T = 150;
  for (int t : {0, 70, 150}) {
    const AccelCoeffs a = accel_coeffs(AccelLabel::A1, t, T);
    EXPECT_EQ(a.c1, 2.0);
    EXPECT_EQ(a.c2, 2.0);
  }
  AccelCoeffs a = accel_coeffs(AccelLabel::A2, 0, T);
  EXPECT_NEAR(a.c1, 2.55, 1e-12);
  EXPECT_NEAR(a.c2, 1.25, 1e-12);
  a = accel_coeffs(AccelLabel::A2, T, T);
  EXPECT_NEAR(a.c1, 0.5, 1e-12);
  EXPECT_NEAR(a.c2, 2.25, 1e-12);
  a = accel_coeffs(AccelLabel::A3, 0, T);
  EXPECT_NEAR(a.c1, 2.5, 1e-12);
  EXPECT_NEAR(a.c2, 0.5, 1e-12);
  a = accel_coeffs(AccelLabel::A3, T, T);
  EXPECT_NEAR(a.c1, 0.5, 1e-12);
  EXPECT_NEAR(a.c2, 2.5, 1e-12);
}

TEST(Accel, TimeVaryingDirections) {
  for (AccelLabel l : {AccelLabel::A2, AccelLabel::A3}) {
    const int T = 200;
    AccelCoeffs prev = accel_coeffs(l, 0, T);
    for (int t = 1; t <= T; ++t) {
      const AccelCoeffs a = accel_coeffs(l, t, T);
      EXPECT_LE(a.c1, prev.c1 + 1e-15);
      EXPECT_GE(a.c2, prev.c2 - 1e-15);
      prev = a;
    }
  }
}

TEST(Variants, TableShapeAndLookups) {
  const auto& table = variant_table();
  ASSERT_EQ(table.size(), 39u);
  std::set<std::string> names;
  for (const VariantSpec& v : table) names.insert(v.name);
  EXPECT_EQ(names.size(), 39u);

  EXPECT_EQ(find_variant("MPSO11").inertia, InertiaLabel::W11);
  EXPECT_EQ(find_variant("MPSO11").accel, AccelLabel::A2);
  EXPECT_EQ(find_variant("IPSO").inertia, InertiaLabel::W0);
  EXPECT_EQ(find_variant("IPSO").accel, AccelLabel::A3);
  EXPECT_EQ(find_variant("PSO").inertia, InertiaLabel::W0);
  EXPECT_EQ(find_variant("PSO").accel, AccelLabel::A1);
  EXPECT_EQ(find_variant("PSO7").inertia, InertiaLabel::W7);
  EXPECT_EQ(find_variant("IPSO12").accel, AccelLabel::A3);
  EXPECT_THROW(find_variant("PSO13"), UsageError);
  EXPECT_THROW(find_variant("mpso11"), UsageError);
}

TEST(Variants, NamingRule) {
  for (const VariantSpec& v : variant_table()) {
    const std::string prefix = v.accel == AccelLabel::A1 ? "PSO" : v.accel == AccelLabel::A2 ? "MPSO" : "IPSO";
    const int w = static_cast<int>(v.inertia);
    EXPECT_EQ(v.name, w == 0 ? prefix : prefix + std::to_string(w));
  }
}

TEST(Variants, ResolveList) {
  EXPECT_EQ(resolve_variants("all").size(), 39u);
  const auto v = resolve_variants("PSO, MPSO11,IPSO12");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[1].name, "MPSO11");
  EXPECT_THROW(resolve_variants("PSO,NOPE"), UsageError);
  EXPECT_THROW(resolve_variants(""), UsageError);
}

}  // namespace
}  // namespace swarmloc
