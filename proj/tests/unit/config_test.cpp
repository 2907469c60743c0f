#include <sstream>

#include <gtest/gtest.h>

#include "swarmloc/config.hpp"
#include "swarmloc/errors.hpp"

namespace swarmloc {
namespace {

TEST(ApplySetting, KnownKeys) {
  ExperimentConfig cfg;
  apply_setting(cfg, "n_sus", "10");
  apply_setting(cfg, "snr0_db", "-5.5");
  apply_setting(cfg, "noise", "off");
  apply_setting(cfg, "emitter", "100,-200");
  apply_setting(cfg, "variants", "PSO,MPSO11");
  apply_setting(cfg, "checkpoints", "1,5,10");
  apply_setting(cfg, "v_max", "1000");
  apply_setting(cfg, "seed", "42");
  apply_setting(cfg, "deploy_seed", "7");
  EXPECT_EQ(cfg.scenario.n_sus, 10);
  EXPECT_EQ(cfg.noise.snr0_db, -5.5);
  EXPECT_FALSE(cfg.noise.noise_enabled);
  EXPECT_EQ(cfg.emitter, (Point{100, -200}));
  ASSERT_EQ(cfg.variants.size(), 2u);
  EXPECT_EQ(cfg.variants[1].name, "MPSO11");
  EXPECT_EQ(cfg.checkpoints, (std::vector<int>{1, 5, 10}));
  EXPECT_EQ(cfg.pso.velocity_limit(), 1000.0);
  EXPECT_EQ(cfg.master_seed, 42u);
  EXPECT_EQ(cfg.scenario.seed, 7u);
}

TEST(ApplySetting, ErrorsNameTheField) {
  ExperimentConfig cfg;
  const auto field_of = [&](const char* k, const char* v) {
    try {
      apply_setting(cfg, k, v);
    } catch (const ConfigError& e) {
      return e.field();
    }
    return std::string("<none>");
  };
  EXPECT_EQ(field_of("trials", "many"), "trials");
  EXPECT_EQ(field_of("noise", "maybe"), "noise");
  EXPECT_EQ(field_of("emitter", "5"), "emitter");
  EXPECT_EQ(field_of("variants", "ZPSO"), "variants");
  EXPECT_EQ(field_of("colour", "red"), "colour");
}

TEST(LoadConfig, CommentsAndWhitespace) {
  ExperimentConfig cfg;
  std::istringstream in("# experiment\n\n trials = 25  \niterations=60 # inline\nredeploy_per_trial = on\n");
  load_config(cfg, in);
  EXPECT_EQ(cfg.trials, 25);
  EXPECT_EQ(cfg.pso.max_iterations, 60);
  EXPECT_TRUE(cfg.redeploy_per_trial);
}

TEST(LoadConfig, MalformedLine) {
  ExperimentConfig cfg;
  std::istringstream in("trials 25\n");
  EXPECT_THROW(load_config(cfg, in), ConfigError);
}

TEST(LoadConfig, MissingFileIsIoError) {
  ExperimentConfig cfg;
  EXPECT_THROW(load_config_file(cfg, "/nonexistent/swarmloc.conf"), IoError);
}

}  // namespace
}  // namespace swarmloc
