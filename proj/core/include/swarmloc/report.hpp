#pragma once

#include <filesystem>
#include <iosfwd>

#include "swarmloc/experiment.hpp"

namespace swarmloc {

void write_convergence_csv(std::ostream& out, const ReportBundle& r);
void write_mse_csv(std::ostream& out, const std::vector<MseRow>& rows);
void write_cdf_csv(std::ostream& out, const std::vector<CdfRow>& rows);
void write_summary_csv(std::ostream& out, const ReportBundle& r);
void write_decisions_jsonl(std::ostream& out, const ReportBundle& r);

/// Config echo, seeds and version; deterministic for a given config.
void write_metadata_json(std::ostream& out, const ExperimentConfig& cfg);

/// Creates `dir` and checks that a file can be created inside it.
/// Throws IoError otherwise.
void ensure_writable_dir(const std::filesystem::path& dir);

/// Writes convergence.csv, mse_vs_iteration.csv, cdf.csv, summary.csv,
/// decisions.jsonl, metadata.json and timings.json. Everything except
/// timings.json is a pure function of the config.
void write_report(const std::filesystem::path& dir, const ReportBundle& r,
                  const ExperimentConfig& cfg);

/// Formats a double with round-trip precision.
std::string format_double(double v);

}  // namespace swarmloc
