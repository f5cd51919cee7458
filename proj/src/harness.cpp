#include "epf/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>

#include <nlohmann/json.hpp>

#include "epf/reference.hpp"

namespace epf {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_time(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::ofstream open_output(const std::string& dir, const std::string& name,
                          std::vector<std::string>& written) {
  const fs::path path = fs::path(dir) / name;
  std::ofstream out(path);
  if (!out) throw structural_error("cannot write output file '" + path.string() + "'");
  written.push_back(name);
  return out;
}

QuadratureGrid build_variant_grid(const ProjectionVariant& v, int dim) {
  if (v.rule == "halton") return halton(dim, v.count);
  if (v.rule == "gauss_chebyshev" && v.count > 0) {
    if (dim != 1) throw structural_error("count-based gauss_chebyshev grids are unidimensional");
    return gauss_chebyshev(v.count);
  }
  Rule1D rule{rule_kind_from_string(v.rule)};
  return smolyak(rule, dim, v.level, v.elide_boundary);
}

Mat linear_coefficient_matrix(const std::vector<Polynomial>& polys, int dim_x) {
  Mat A = Mat::Zero(static_cast<Index>(polys.size()), dim_x);
  for (std::size_t k = 0; k < polys.size(); ++k) {
    for (int j = 0; j < dim_x; ++j) {
      A(static_cast<Index>(k), j) = polys[k].coefficient(MultiIndex::axis(dim_x, j, 1));
    }
  }
  return A;
}

double gaussian_moment(const GaussianBelief& belief, const MultiIndex& idx) {
  const int deg = idx.degree();
  if (deg == 0) return 1.0;
  if (deg == 1) {
    for (int a = 0; a < idx.dim(); ++a) {
      if (idx[a] == 1) return belief.mean[a];
    }
  }
  if (deg == 2) {
    int first = -1, second = -1;
    for (int a = 0; a < idx.dim(); ++a) {
      for (int e = 0; e < idx[a]; ++e) {
        (first < 0 ? first : second) = a;
      }
    }
    return belief.mean[first] * belief.mean[second] + belief.cov(first, second);
  }
  throw capability_error("Gaussian belief moments available up to total degree 2, got x^(" +
                         idx.to_string() + ")");
}

DensityGrid rasterize_projection(const PreparedManifold& man, const Vec& theta,
                                 const std::vector<GridAxis>& axes) {
  DensityGrid grid = make_density_grid(axes);
  Mat points(grid.size(), grid.dim());
  for (Index i = 0; i < grid.size(); ++i) points.row(i) = grid.point(i).transpose();
  grid.values = density_at(man, theta, points).array();
  grid.normalize();
  return grid;
}

struct SolverOutputs {
  // densities on the compare grid at metric times, built lazily per solver
  std::vector<DensityGrid> densities;
  std::map<std::string, std::vector<double>> moments;  // idx string -> series
  bool available = false;
};

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg, const RunOptions& options) {
  ExperimentResult result;
  if (options.write_outputs) fs::create_directories(options.out_dir);

  const ModelSpec model_filter = cfg.model.scaled_to_unit_observation_noise();
  auto [basis, coeffs] = assemble_coefficients(model_filter, cfg.statistics);
  const Vec dy_scale = cfg.model.observation_noise_diag.cwiseSqrt().cwiseInverse();

  Vec theta0;
  if (cfg.theta0) {
    theta0 = *cfg.theta0;
  } else {
    theta0 = gaussian_to_natural(*cfg.init_mean, *cfg.init_cov, basis);
  }

  // requested moments must be available from every projection variant
  for (const auto& idx : cfg.compare.moments) {
    if (basis.index_of(idx) < 0)
      throw capability_error("moment x^(" + idx.to_string() +
                             ") is not among the extended statistics of this basis");
  }

  // one shared measurement realization
  const int n_steps = cfg.steps();
  CounterRng sim_rng(options.seed, 0);
  Stopwatch sim_watch;
  const SdeSimulation sim = simulate_sde(cfg.model, cfg.x0, cfg.dt, n_steps, sim_rng);
  result.reports.push_back({"simulation", sim_watch.seconds(), false, -1, ""});

  MeasurementPath filter_path;
  filter_path.dt = cfg.dt;
  filter_path.increments = sim.path.increments * dy_scale.asDiagonal();

  // metric evaluation times
  std::vector<int> metric_steps;
  for (int k = 0; k * cfg.metric_stride <= n_steps; ++k) metric_steps.push_back(k * cfg.metric_stride);
  for (int s : metric_steps) result.metric_times.push_back(s * cfg.dt);

  const bool compare_enabled = !cfg.compare.grid.empty();

  // ---- projection variants ----------------------------------------------
  struct VariantRun {
    ProjectionVariant variant;
    std::optional<PreparedManifold> man;
    std::vector<FilterState> states;  // one per step (stride 1)
    bool ok = false;
  };
  std::vector<VariantRun> variant_runs;
  for (const auto& v : cfg.variants) {
    VariantRun run;
    run.variant = v;
    Stopwatch watch;
    SolverReport report{v.name, 0.0, false, -1, ""};
    try {
      const QuadratureGrid grid = build_variant_grid(v, cfg.model.dim_x);
      std::vector<Bijection> bijections(static_cast<std::size_t>(cfg.model.dim_x),
                                        Bijection{v.bijection, v.scale});
      run.man = prepare(basis, bijections, grid);
      RunDiagnostics diag;
      StepControl control;
      control.heun = cfg.heun;
      run.states = run_filter(theta0, filter_path, coeffs, *run.man, control, 1, &diag);
      result.filter_diagnostics[v.name] = diag;
      run.ok = true;
    } catch (const StepFailure& e) {
      report.failed = true;
      report.fail_step = e.step();
      report.message = e.what();
      result.any_failed = true;
    } catch (const Error& e) {
      report.failed = true;
      report.message = e.what();
      result.any_failed = true;
    }
    report.wall_seconds = watch.seconds();
    result.reports.push_back(report);
    variant_runs.push_back(std::move(run));
  }

  // ---- Kalman-Bucy -------------------------------------------------------
  std::vector<GaussianBelief> kb_states;
  bool kb_ok = false;
  if (cfg.baselines.kalman_bucy) {
    Stopwatch watch;
    SolverReport report{"kalman_bucy", 0.0, false, -1, ""};
    try {
      const Mat A = linear_coefficient_matrix(cfg.model.drift, cfg.model.dim_x);
      const Mat C = linear_coefficient_matrix(cfg.model.observation, cfg.model.dim_x);
      Mat Q_eff = Mat::Zero(cfg.model.dim_x, cfg.model.dim_x);
      {
        const auto alpha = cfg.model.diffusion_matrix();
        const Vec origin = Vec::Zero(cfg.model.dim_x);
        for (int i = 0; i < cfg.model.dim_x; ++i) {
          for (int j = 0; j < cfg.model.dim_x; ++j) {
            Q_eff(i, j) = alpha[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(origin);
          }
        }
      }
      const Mat R_eff = cfg.model.observation_noise_diag.asDiagonal();
      GaussianBelief belief{*cfg.init_mean, *cfg.init_cov};
      kb_states.reserve(static_cast<std::size_t>(n_steps) + 1);
      kb_states.push_back(belief);
      for (int t = 0; t < n_steps; ++t) {
        belief = kalman_bucy_step(belief, sim.path.increments.row(t).transpose(), cfg.dt, A, C,
                                  Q_eff, R_eff);
        kb_states.push_back(belief);
      }
      kb_ok = true;
    } catch (const Error& e) {
      report.failed = true;
      report.message = e.what();
      result.any_failed = true;
    }
    report.wall_seconds = watch.seconds();
    result.reports.push_back(report);
  }

  // ---- Kushner-Stratonovich finite differences ---------------------------
  std::vector<DensityGrid> ks_at_metric;
  bool ks_ok = false;
  if (cfg.baselines.ks_scheme != "none") {
    Stopwatch watch;
    SolverReport report{"ks", 0.0, false, -1, ""};
    try {
      const auto scheme = cfg.baselines.ks_scheme == "explicit" ? KushnerSolver::Scheme::explicit_fd
                                                                : KushnerSolver::Scheme::crank_nicolson;
      KushnerOptions ks_options;
      ks_options.stability_limit = cfg.baselines.stability_limit;
      KushnerSolver solver(cfg.model, cfg.baselines.ks_grid, cfg.baselines.ks_dt, scheme, ks_options);

      DensityGrid grid = make_density_grid(cfg.baselines.ks_grid);
      if (cfg.theta0) {
        for (Index i = 0; i < grid.size(); ++i) {
          const Vec x = grid.point(i);
          double dot = 0.0;
          for (std::size_t s = 0; s < cfg.statistics.size(); ++s) {
            double mono = 1.0;
            for (int a = 0; a < cfg.model.dim_x; ++a) {
              for (int e = 0; e < cfg.statistics[s][a]; ++e) mono *= x[a];
            }
            dot += mono * (*cfg.theta0)[static_cast<Index>(s)];
          }
          grid.values[i] = std::exp(dot);
        }
      } else {
        grid.values = gaussian_density_on(grid, GaussianBelief{*cfg.init_mean, *cfg.init_cov}).array();
      }
      grid.normalize();

      const int fine_per_ks = static_cast<int>(std::round(cfg.baselines.ks_dt / cfg.dt));
      const int metric_every = static_cast<int>(std::round(cfg.metric_stride * cfg.dt / cfg.baselines.ks_dt));
      ks_at_metric.push_back(grid);
      int ks_step_count = 0;
      for (int start = 0; start + fine_per_ks <= n_steps; start += fine_per_ks) {
        Vec dy = Vec::Zero(cfg.model.dim_y);
        for (int i = 0; i < fine_per_ks; ++i) dy += sim.path.increments.row(start + i).transpose();
        solver.step(grid, dy);
        ++ks_step_count;
        if (ks_step_count % metric_every == 0 &&
            static_cast<std::size_t>(ks_step_count / metric_every) < metric_steps.size()) {
          ks_at_metric.push_back(grid);
        }
      }
      result.ks_diagnostics = solver.diagnostics();
      ks_ok = true;
    } catch (const Error& e) {
      report.failed = true;
      report.message = e.what();
      result.any_failed = true;
    }
    report.wall_seconds = watch.seconds();
    result.reports.push_back(report);
  }

  // ---- bootstrap particle filter -----------------------------------------
  std::vector<DensityGrid> pf_kde_at_metric;
  std::vector<Vec> pf_moments_at_metric;  // configured moments per metric time
  std::vector<std::pair<double, ParticleEnsemble>> pf_snapshots;
  bool pf_ok = false;
  const bool pf_needs_density = compare_enabled;
  if (cfg.baselines.particle_filter) {
    Stopwatch watch;
    SolverReport report{"particle", 0.0, false, -1, ""};
    try {
      CounterRng pf_rng(options.seed, 1);
      const Mat l_cov = Mat(cfg.init_cov->llt().matrixL());
      ParticleEnsemble ens;
      ens.positions = Mat(cfg.baselines.particle_count, cfg.model.dim_x);
      for (int i = 0; i < cfg.baselines.particle_count; ++i) {
        ens.positions.row(i) = (*cfg.init_mean + l_cov * pf_rng.normal_vec(cfg.model.dim_x)).transpose();
      }
      ens.weights = Vec::Constant(cfg.baselines.particle_count, 1.0 / cfg.baselines.particle_count);

      ParticleFilterOptions pf_options;
      pf_options.always_resample = cfg.baselines.always_resample;

      auto record = [&](const ParticleEnsemble& e) {
        Vec mom(static_cast<Index>(cfg.compare.moments.size()));
        for (std::size_t s = 0; s < cfg.compare.moments.size(); ++s) {
          const MultiIndex& idx = cfg.compare.moments[s];
          double acc = 0.0;
          for (Index i = 0; i < e.positions.rows(); ++i) {
            double mono = 1.0;
            for (int a = 0; a < cfg.model.dim_x; ++a) {
              for (int p = 0; p < idx[a]; ++p) mono *= e.positions(i, a);
            }
            acc += e.weights[i] * mono;
          }
          mom[static_cast<Index>(s)] = acc;
        }
        pf_moments_at_metric.push_back(mom);
        if (pf_needs_density) pf_kde_at_metric.push_back(kde_density(e, cfg.compare.grid));
      };

      auto snapshot = [&](double time, const ParticleEnsemble& e) {
        for (double s : cfg.compare.snapshot_times) {
          if (std::abs(s - time) < 0.5 * cfg.dt) pf_snapshots.push_back({s, e});
        }
      };
      record(ens);
      snapshot(0.0, ens);
      for (int t = 0; t < n_steps; ++t) {
        ens = particle_filter_step(ens, sim.path.increments.row(t).transpose(), cfg.dt, cfg.model,
                                   pf_rng, pf_options);
        if ((t + 1) % cfg.metric_stride == 0) record(ens);
        snapshot((t + 1) * cfg.dt, ens);
      }
      pf_ok = true;
    } catch (const Error& e) {
      report.failed = true;
      report.message = e.what();
      result.any_failed = true;
    }
    report.wall_seconds = watch.seconds();
    result.reports.push_back(report);
  }

  // ---- per-solver moment series and densities at metric times ------------
  const auto idx_string = [](const MultiIndex& idx) {
    std::string s = idx.to_string();
    std::replace(s.begin(), s.end(), ',', '-');
    return s;
  };

  std::map<std::string, SolverOutputs> outputs;
  for (std::size_t vi = 0; vi < variant_runs.size(); ++vi) {
    auto& run = variant_runs[vi];
    if (!run.ok) continue;
    SolverOutputs& out = outputs[run.variant.name];
    out.available = true;
    for (const auto& idx : cfg.compare.moments) {
      const int pos = basis.index_of(idx);
      auto& series = out.moments[idx_string(idx)];
      for (int s : metric_steps) series.push_back(run.states[static_cast<std::size_t>(s)].moments.eta_tilde[pos]);
    }
    if (compare_enabled) {
      for (int s : metric_steps) {
        out.densities.push_back(rasterize_projection(*run.man, run.states[static_cast<std::size_t>(s)].theta,
                                                     cfg.compare.grid));
      }
    }
  }
  if (kb_ok) {
    SolverOutputs& out = outputs["kalman_bucy"];
    out.available = true;
    for (const auto& idx : cfg.compare.moments) {
      auto& series = out.moments[idx_string(idx)];
      for (int s : metric_steps) series.push_back(gaussian_moment(kb_states[static_cast<std::size_t>(s)], idx));
    }
    if (compare_enabled) {
      for (int s : metric_steps) {
        DensityGrid grid = make_density_grid(cfg.compare.grid);
        grid.values = gaussian_density_on(grid, kb_states[static_cast<std::size_t>(s)]).array();
        grid.normalize();
        out.densities.push_back(std::move(grid));
      }
    }
  }
  if (ks_ok) {
    SolverOutputs& out = outputs["ks"];
    out.available = true;
    for (const auto& idx : cfg.compare.moments) {
      auto& series = out.moments[idx_string(idx)];
      for (const auto& grid : ks_at_metric) series.push_back(grid.expectation(idx));
    }
    out.densities = std::move(ks_at_metric);
  }
  if (pf_ok) {
    SolverOutputs& out = outputs["particle"];
    out.available = true;
    for (std::size_t s = 0; s < cfg.compare.moments.size(); ++s) {
      auto& series = out.moments[idx_string(cfg.compare.moments[s])];
      for (const auto& mom : pf_moments_at_metric) series.push_back(mom[static_cast<Index>(s)]);
    }
    out.densities = std::move(pf_kde_at_metric);
  }

  // ---- comparison pairs ----------------------------------------------------
  std::vector<std::pair<std::string, std::string>> pairs;
  if (!cfg.compare.reference.empty()) {
    for (const auto& [name, out] : outputs) {
      if (name != cfg.compare.reference) pairs.push_back({name, cfg.compare.reference});
    }
  }
  for (const auto& p : cfg.compare.extra_pairs) pairs.push_back(p);

  for (const auto& [a, b] : pairs) {
    auto ia = outputs.find(a);
    auto ib = outputs.find(b);
    if (ia == outputs.end() || ib == outputs.end()) continue;  // a solver failed; recorded above
    if (compare_enabled) {
      const std::size_t n = std::min(ia->second.densities.size(), ib->second.densities.size());
      std::vector<double> series;
      series.reserve(n);
      for (std::size_t t = 0; t < n; ++t) {
        series.push_back(hellinger(ia->second.densities[t], ib->second.densities[t]));
      }
      result.hellinger[a + "|" + b] = std::move(series);
    }
  }
  for (const auto& [name, out] : outputs) {
    result.moments[name] = out.moments;
  }

  if (!options.write_outputs) return result;

  // ---- artifacts ------------------------------------------------------------
  {
    auto out = open_output(options.out_dir, "states.csv", result.written_files);
    out << "time";
    for (int a = 1; a <= cfg.model.dim_x; ++a) out << ",x" << a;
    out << '\n';
    for (int t = 0; t <= n_steps; t += cfg.output_stride) {
      out << fmt(t * cfg.dt);
      for (int a = 0; a < cfg.model.dim_x; ++a) out << ',' << fmt(sim.states(t, a));
      out << '\n';
    }
  }
  {
    auto out = open_output(options.out_dir, "measurements.csv", result.written_files);
    out << "time";
    for (int k = 1; k <= cfg.model.dim_y; ++k) out << ",dy" << k;
    out << '\n';
    for (int t = 0; t < n_steps; t += cfg.output_stride) {
      out << fmt((t + 1) * cfg.dt);
      for (int k = 0; k < cfg.model.dim_y; ++k) out << ',' << fmt(sim.path.increments(t, k));
      out << '\n';
    }
  }
  for (const auto& run : variant_runs) {
    if (!run.ok) continue;
    auto out = open_output(options.out_dir, "projection_" + run.variant.name + ".csv", result.written_files);
    out << "time";
    for (int i = 1; i <= basis.m(); ++i) out << ",theta" << i;
    for (int i = 1; i <= basis.m(); ++i) out << ",eta" << i;
    out << ",psi\n";
    for (std::size_t s = 0; s < run.states.size(); s += static_cast<std::size_t>(cfg.output_stride)) {
      const FilterState& st = run.states[s];
      out << fmt(st.time);
      for (int i = 0; i < basis.m(); ++i) out << ',' << fmt(st.theta[i]);
      for (int i = 0; i < basis.m(); ++i) out << ',' << fmt(st.moments.eta[i]);
      out << ',' << fmt(st.moments.psi) << '\n';
    }
  }
  if (kb_ok) {
    auto out = open_output(options.out_dir, "kalman_bucy.csv", result.written_files);
    out << "time";
    for (int a = 1; a <= cfg.model.dim_x; ++a) out << ",mean" << a;
    for (int a = 1; a <= cfg.model.dim_x; ++a) {
      for (int b = a; b <= cfg.model.dim_x; ++b) out << ",cov" << a << b;
    }
    out << '\n';
    for (int t = 0; t <= n_steps; t += cfg.output_stride) {
      const auto& belief = kb_states[static_cast<std::size_t>(t)];
      out << fmt(t * cfg.dt);
      for (int a = 0; a < cfg.model.dim_x; ++a) out << ',' << fmt(belief.mean[a]);
      for (int a = 0; a < cfg.model.dim_x; ++a) {
        for (int b = a; b < cfg.model.dim_x; ++b) out << ',' << fmt(belief.cov(a, b));
      }
      out << '\n';
    }
  }
  for (const auto& [name, out_data] : outputs) {
    if (out_data.moments.empty()) continue;
    auto out = open_output(options.out_dir, "moments_" + name + ".csv", result.written_files);
    out << "time";
    for (const auto& idx : cfg.compare.moments) out << ",x" << idx_string(idx);
    out << '\n';
    for (std::size_t t = 0; t < result.metric_times.size(); ++t) {
      out << fmt(result.metric_times[t]);
      for (const auto& idx : cfg.compare.moments) {
        const auto& series = out_data.moments.at(idx_string(idx));
        out << ',' << (t < series.size() ? fmt(series[t]) : "nan");
      }
      out << '\n';
    }
  }
  for (const auto& [key, series] : result.hellinger) {
    const auto bar = key.find('|');
    const std::string name = "hellinger_" + key.substr(0, bar) + "_vs_" + key.substr(bar + 1) + ".csv";
    auto out = open_output(options.out_dir, name, result.written_files);
    out << "time,value\n";
    for (std::size_t t = 0; t < series.size(); ++t) {
      out << fmt(result.metric_times[t]) << ',' << fmt(series[t]) << '\n';
    }
  }
  for (const auto& [a, b] : pairs) {
    auto ia = outputs.find(a);
    auto ib = outputs.find(b);
    if (ia == outputs.end() || ib == outputs.end()) continue;
    for (const auto& idx : cfg.compare.moments) {
      const auto trace = moment_trace(result.metric_times, ia->second.moments.at(idx_string(idx)),
                                      result.metric_times, ib->second.moments.at(idx_string(idx)), a, b);
      auto out = open_output(options.out_dir, "moment_" + idx_string(idx) + "_" + a + "_vs_" + b + ".csv",
                             result.written_files);
      out << "time,value\n";
      for (std::size_t t = 0; t < trace.times.size(); ++t) {
        out << fmt(trace.times[t]) << ',' << fmt(trace.values[t]) << '\n';
      }
    }
  }
  // density snapshots
  for (double snap : cfg.compare.snapshot_times) {
    // metric index of the snapshot (validated to align)
    std::size_t best = 0;
    for (std::size_t t = 0; t < result.metric_times.size(); ++t) {
      if (std::abs(result.metric_times[t] - snap) < std::abs(result.metric_times[best] - snap)) best = t;
    }
    for (const auto& [name, out_data] : outputs) {
      if (out_data.densities.size() <= best) continue;
      auto out = open_output(options.out_dir, "density_" + name + "_t" + fmt_time(snap) + ".csv",
                             result.written_files);
      const DensityGrid& grid = out_data.densities[best];
      for (const auto& axis : grid.axes) {
        out << "# axis," << fmt(axis.lo) << ',' << fmt(axis.hi) << ',' << axis.count << '\n';
      }
      for (Index i = 0; i < grid.size(); ++i) out << fmt(grid.values[i]) << '\n';
    }
  }

  for (const auto& [time, ens] : pf_snapshots) {
    auto out = open_output(options.out_dir, "particles_t" + fmt_time(time) + ".csv",
                           result.written_files);
    for (int a = 1; a <= cfg.model.dim_x; ++a) out << 'x' << a << ',';
    out << "weight\n";
    for (Index i = 0; i < ens.positions.rows(); ++i) {
      for (int a = 0; a < cfg.model.dim_x; ++a) out << fmt(ens.positions(i, a)) << ',';
      out << fmt(ens.weights[i]) << '\n';
    }
  }

  // manifest
  {
    json manifest;
    manifest["version"] = "epf 0.1.0";
    manifest["config_fingerprint"] = options.fingerprint;
    manifest["seed"] = options.seed;
    manifest["threads_requested"] = options.threads;
    manifest["metric_times"] = result.metric_times.size();
    json solvers = json::array();
    for (const auto& report : result.reports) {
      json s;
      s["name"] = report.name;
      s["wall_seconds"] = report.wall_seconds;
      s["failed"] = report.failed;
      if (report.failed) {
        s["fail_step"] = report.fail_step;
        s["message"] = report.message;
      }
      if (auto it = result.filter_diagnostics.find(report.name); it != result.filter_diagnostics.end()) {
        s["min_fisher_eigenvalue"] = it->second.min_fisher_eigenvalue;
        s["max_solve_residual"] = it->second.max_solve_residual;
        s["max_jitter_used"] = it->second.max_jitter_used;
      }
      if (report.name == "ks") {
        s["clamped_negative"] = result.ks_diagnostics.clamped_negative;
        s["max_boundary_mass"] = result.ks_diagnostics.max_boundary_mass;
      }
      solvers.push_back(s);
    }
    manifest["solvers"] = solvers;
    manifest["outputs"] = result.written_files;
    auto out = open_output(options.out_dir, "manifest.json", result.written_files);
    out << manifest.dump(2) << '\n';
  }

  return result;
}

}  // namespace epf
