#include "swarmloc/report.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <system_error>

#include "json.hpp"
#include "swarmloc/errors.hpp"

namespace swarmloc {

inline constexpr const char* kVersion = "0.1.0";

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_convergence_csv(std::ostream& out, const ReportBundle& r) {
  out << "variant,mean_convergence_iteration\n";
  for (const ConvergenceRow& c : r.convergence) out << c.variant << ',' << format_double(c.mean_iteration) << '\n';
}

void write_mse_csv(std::ostream& out, const std::vector<MseRow>& rows) {
  out << "variant,t,mse,rms,bias2,n\n";
  for (const MseRow& m : rows)
    out << m.variant << ',' << m.t << ',' << format_double(m.stats.mse) << ',' << format_double(m.stats.rms) << ','
        << format_double(m.stats.bias2) << ',' << m.stats.n << '\n';
}

void write_cdf_csv(std::ostream& out, const std::vector<CdfRow>& rows) {
  out << "variant,z_m,F\n";
  for (const CdfRow& c : rows) out << c.variant << ',' << format_double(c.z) << ',' << format_double(c.F) << '\n';
}

void write_summary_csv(std::ostream& out, const ReportBundle& r) {
  out << "variant,mse,rms,bias2,n,median_error_m,puea_rate,failures\n";
  for (const SummaryRow& s : r.summary)
    out << s.variant << ',' << format_double(s.stats.mse) << ',' << format_double(s.stats.rms) << ','
        << format_double(s.stats.bias2) << ',' << s.stats.n << ',' << format_double(s.median_error) << ','
        << format_double(s.puea_rate) << ',' << s.failures << '\n';
}

void write_decisions_jsonl(std::ostream& out, const ReportBundle& r) {
  for (const DecisionRow& d : r.decisions) {
    nlohmann::ordered_json j;
    j["trial"] = d.trial;
    j["variant"] = d.variant;
    const auto decision = nlohmann::ordered_json::parse(to_json(d.decision));
    for (const auto& [k, v] : decision.items()) j[k] = v;
    out << j.dump() << '\n';
  }
}

void write_metadata_json(std::ostream& out, const ExperimentConfig& cfg) {
  nlohmann::ordered_json j;
  j["tool"] = "swarmloc";
  j["version"] = kVersion;
  j["master_seed"] = cfg.master_seed;
  j["deploy_seed"] = cfg.scenario.seed;
  j["trials"] = cfg.trials;
  j["redeploy_per_trial"] = cfg.redeploy_per_trial;
  j["scenario"] = {{"n_sus", cfg.scenario.n_sus},
                   {"half_width", cfg.scenario.half_width},
                   {"pu_distance", cfg.scenario.pu_distance},
                   {"pu_bearing", cfg.scenario.pu_bearing}};
  j["emitter"] = {cfg.emitter.x, cfg.emitter.y};
  j["noise"] = {{"enabled", cfg.noise.noise_enabled},
                {"bandwidth_hz", cfg.noise.bandwidth_hz},
                {"snr0_db", cfg.noise.snr0_db},
                {"antenna_height_m", cfg.noise.antenna_height_m}};
  j["pso"] = {{"swarm_size", cfg.pso.swarm_size},
              {"iterations", cfg.pso.max_iterations},
              {"bound", cfg.pso.bound},
              {"v_max", cfg.pso.velocity_limit()}};
  j["detector"] = {{"pu_threshold", cfg.thresholds.pu_threshold}, {"su_threshold", cfg.thresholds.su_threshold}};
  auto names = nlohmann::ordered_json::array();
  for (const VariantSpec& v : cfg.variants) names.push_back(v.name);
  j["variants"] = names;
  out << j.dump(2) << '\n';
}

void ensure_writable_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  const auto probe = dir / ".swarmloc-write-test";
  {
    std::ofstream f(probe);
    if (!f) throw IoError("output directory is not writable: " + dir.string());
  }
  std::filesystem::remove(probe, ec);
}

namespace {

template <typename Fn>
void write_file(const std::filesystem::path& path, Fn&& fn) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  fn(out);
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

void write_report(const std::filesystem::path& dir, const ReportBundle& r, const ExperimentConfig& cfg) {
  ensure_writable_dir(dir);
  write_file(dir / "convergence.csv", [&](std::ostream& o) { write_convergence_csv(o, r); });
  write_file(dir / "mse_vs_iteration.csv", [&](std::ostream& o) { write_mse_csv(o, r.mse_vs_iteration); });
  write_file(dir / "cdf.csv", [&](std::ostream& o) { write_cdf_csv(o, r.cdf); });
  write_file(dir / "summary.csv", [&](std::ostream& o) { write_summary_csv(o, r); });
  write_file(dir / "decisions.jsonl", [&](std::ostream& o) { write_decisions_jsonl(o, r); });
  write_file(dir / "metadata.json", [&](std::ostream& o) { write_metadata_json(o, cfg); });
  write_file(dir / "timings.json", [&](std::ostream& o) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const ConvergenceRow& c : r.convergence)
      j.push_back({{"variant", c.variant}, {"mean_wall_seconds", c.mean_wall_seconds}});
    o << j.dump(2) << '\n';
  });
}

}  // namespace swarmloc
