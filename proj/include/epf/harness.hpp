#pragma once

#include <map>
#include <string>
#include <vector>

#include "epf/config.hpp"
#include "epf/filter.hpp"
#include "epf/metrics.hpp"

namespace epf {

struct SolverReport {
  std::string name;
  double wall_seconds = 0.0;
  bool failed = false;
  int fail_step = -1;
  std::string message;
};

struct RunOptions {
  std::string out_dir = "out";
  std::string fingerprint;
  std::uint64_t seed = 0;       // effective seed (config or CLI override)
  int threads = 1;              // recorded; execution is sequential
  bool write_outputs = true;
};

/// Everything the acceptance suite needs to assert on, in memory; the same
/// series are written as CSV artifacts plus a manifest.json.
struct ExperimentResult {
  std::vector<SolverReport> reports;
  std::vector<double> metric_times;
  std::map<std::string, std::vector<double>> hellinger;            // "a|b" -> series
  std::map<std::string, std::map<std::string, std::vector<double>>> moments;  // solver -> idx -> series
  std::map<std::string, RunDiagnostics> filter_diagnostics;        // per variant
  KushnerDiagnostics ks_diagnostics;
  bool any_failed = false;
  std::vector<std::string> written_files;
};

/// Runs one shared measurement realization through the projection filter
/// variants and the enabled baselines, evaluates the configured comparisons,
/// and writes all artifacts into out_dir.
ExperimentResult run_experiment(const ExperimentConfig& cfg, const RunOptions& options);

}  // namespace epf
