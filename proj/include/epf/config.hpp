#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "epf/expfam.hpp"
#include "epf/model.hpp"
#include "epf/reference.hpp"

namespace epf {

/// One projection-filter run: quadrature source plus bijection.
struct ProjectionVariant {
  std::string name = "projection";
  std::string rule = "gauss_patterson";  // quadrature rule name or "halton"
  int level = 0;                         // sparse / nested rules
  int count = 0;                         // gauss_chebyshev and halton
  BijectionKind bijection = BijectionKind::arctanh;
  double scale = 1.0;
  bool elide_boundary = true;
};

struct BaselineConfig {
  bool kalman_bucy = false;
  bool particle_filter = false;
  int particle_count = 10000;
  bool always_resample = false;
  std::string ks_scheme = "none";  // none | explicit | crank_nicolson
  double ks_dt = 0.0;
  std::vector<GridAxis> ks_grid;
  double stability_limit = 0.25;
};

struct CompareConfig {
  std::vector<GridAxis> grid;
  std::string reference;  // solver the others are compared against
  std::vector<std::pair<std::string, std::string>> extra_pairs;
  std::vector<double> snapshot_times;
  std::vector<MultiIndex> moments;
};

struct ExperimentConfig {
  ModelSpec model;
  std::vector<MultiIndex> statistics;
  std::vector<ProjectionVariant> variants;

  std::optional<Vec> theta0;     // natural-parameter initial density
  std::optional<Vec> init_mean;  // or Gaussian initial density
  std::optional<Mat> init_cov;

  Vec x0;
  double dt = 0.0;
  double t_end = 0.0;
  std::uint64_t seed = 0;
  int output_stride = 1;
  int metric_stride = 1;
  bool heun = false;  // midpoint-in-drift corrector for the parameter SDE

  BaselineConfig baselines;
  CompareConfig compare;
  std::string output_dir = "out";

  int steps() const { return static_cast<int>(t_end / dt + 0.5); }

  /// Cross-field consistency; throws naming the offending field.
  void validate() const;
};

/// Flat INI-style text: [section] headers, key = value lines, '#' comments.
/// Polynomials use the term syntax "coeff@e1,...,ed", ';'-separated.
/// Overrides are "section.key=value" strings replacing (or adding) one key.
ExperimentConfig parse_config_text(const std::string& text,
                                   const std::vector<std::string>& overrides = {});
ExperimentConfig parse_config_file(const std::string& path,
                                   const std::vector<std::string>& overrides = {});

/// FNV-1a of the raw config text plus overrides; recorded in run manifests.
std::string config_fingerprint(const std::string& text, const std::vector<std::string>& overrides);

}  // namespace epf
