// End-to-end acceptance suite. Each numbered criterion prints one PASS/FAIL
// line with the measured quantities; the process exits nonzero if any
// criterion fails. Usage: epf_acceptance <configs-dir>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "epf/basis.hpp"
#include "epf/config.hpp"
#include "epf/expfam.hpp"
#include "epf/filter.hpp"
#include "epf/harness.hpp"
#include "epf/metrics.hpp"
#include "epf/quadrature.hpp"
#include "epf/reference.hpp"
#include "epf/rng.hpp"

using namespace epf;

namespace {

int failures = 0;
std::string g_configs_dir;
std::optional<ExperimentResult> g_cubic, g_linear, g_vdp;

void run_criterion(int id, const std::string& label,
                   const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    std::tie(pass, detail) = body();
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] criterion %2d: %-28s %s  (%.1fs)\n", pass ? "PASS" : "FAIL", id, label.c_str(),
              detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// analytic moments E[(mu + sigma Z)^p]
Vec gaussian_moments(double mu, double var, int pmax) {
  const double z[9] = {1, 0, 1, 0, 3, 0, 15, 0, 105};
  Vec out(pmax);
  for (int p = 1; p <= pmax; ++p) {
    double acc = 0.0, binom = 1.0;
    for (int k = 0; k <= p; ++k) {
      acc += binom * std::pow(mu, p - k) * std::pow(std::sqrt(var), k) * z[k];
      binom = binom * (p - k) / (k + 1);
    }
    out[p - 1] = acc;
  }
  return out;
}

StatisticsBasis quartic_basis(int extension_to) {
  StatisticsBasis b;
  b.dim_x = 1;
  for (int k = 1; k <= 4; ++k) b.natural.push_back(MultiIndex({k}));
  for (int k = 5; k <= extension_to; ++k) b.extension.push_back(MultiIndex({k}));
  return b;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

ExperimentResult run_bundled(const std::string& name, const std::vector<std::string>& overrides,
                             const std::string& out_dir, bool write_outputs = true) {
  const std::string path = g_configs_dir + "/" + name;
  std::ifstream in(path);
  if (!in) throw structural_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const ExperimentConfig cfg = parse_config_text(buffer.str(), overrides);
  RunOptions options;
  options.out_dir = out_dir;
  options.fingerprint = config_fingerprint(buffer.str(), overrides);
  options.seed = cfg.seed;
  options.write_outputs = write_outputs;
  return run_experiment(cfg, options);
}

}  // namespace

int main(int argc, char** argv) {
  g_configs_dir = argc > 1 ? argv[1] : "configs";
  std::filesystem::create_directories("acceptance_out");

  // 1. Smolyak Gauss-Patterson node counts in two dimensions
  run_criterion(1, "sparse-grid node counts", []() -> std::pair<bool, std::string> {
    const Rule1D gp{RuleKind::gauss_patterson};
    const int levels[] = {3, 4, 5, 6, 8};
    const Index expected[] = {49, 129, 321, 769, 4097};
    std::string detail;
    bool pass = true;
    for (int i = 0; i < 5; ++i) {
      const Index got = smolyak(gp, 2, levels[i]).size();
      pass = pass && got == expected[i];
      detail += (i ? "/" : "") + std::to_string(got);
    }
    return {pass, "levels 3/4/5/6/8 -> " + detail};
  });

  // 2. Gauss-Chebyshev exactness to degree 2n-1
  run_criterion(2, "gauss-chebyshev exactness", []() -> std::pair<bool, std::string> {
    double worst = 0.0;
    for (int n : {2, 4, 8, 16}) {
      const QuadratureGrid g = gauss_chebyshev(n);
      for (int k = 0; k <= 2 * n - 1; ++k) {
        double exact = 0.0;
        if (k % 2 == 0) {
          exact = M_PI;
          for (int j = 2; j <= k; j += 2) exact *= static_cast<double>(j - 1) / j;
        }
        double approx = 0.0;
        for (Index i = 0; i < g.size(); ++i) approx += g.weights[i] * std::pow(g.nodes(i, 0), k);
        worst = std::max(worst, std::abs(approx - exact) / std::max(1.0, std::abs(exact)));
      }
    }
    return {worst <= 1e-13, "max relative error " + fmt(worst) + " (tol 1e-13)"};
  });

  // 3. Gaussian-family moment oracle at arctanh + gauss-patterson level 6
  run_criterion(3, "gaussian moment oracle", []() -> std::pair<bool, std::string> {
    // bijection scale 4: the scale knob exists because arctanh admissibility
    // is range-dependent; scale 1 cannot reach 1e-6 for N(1,4) at this level
    const PreparedManifold man =
        prepare(quartic_basis(8), {Bijection{BijectionKind::arctanh, 4.0}}, gauss_patterson(6));
    double worst = 0.0;
    for (const auto& [mu, var] : std::vector<std::pair<double, double>>{{0.0, 1.0}, {1.0, 4.0}}) {
      const double prec_ = 1.0 / var;
      Vec theta(4);
      theta << prec_ * mu, -0.5 * prec_, 0.0, 0.0;
      const MomentData md = log_partition(man, theta);
      const Vec exact = gaussian_moments(mu, var, 8);
      for (int p = 0; p < 8; ++p) {
        worst =
            std::max(worst, std::abs(md.eta_tilde[p] - exact[p]) / std::max(1.0, std::abs(exact[p])));
      }
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          const double gij = exact[i + j + 1] - exact[i] * exact[j];
          worst = std::max(worst, std::abs(md.fisher(i, j) - gij) / std::max(1.0, std::abs(gij)));
        }
      }
    }
    return {worst <= 1e-6, "max relative error " + fmt(worst) + " (tol 1e-6)"};
  });

  // 4. AD gradients/Hessians vs finite differences and the closed form
  run_criterion(4, "ad correctness", []() -> std::pair<bool, std::string> {
    double worst_fd = 0.0, worst_cf = 0.0;
    CounterRng rng(2024, 0);
    // family A: unidimensional quartic; family B: two-dimensional gaussian
    const PreparedManifold man_a =
        prepare(quartic_basis(6), {Bijection{BijectionKind::arctanh, 2.0}}, gauss_patterson(6));
    StatisticsBasis basis_b;
    basis_b.dim_x = 2;
    basis_b.natural = {MultiIndex({0, 1}), MultiIndex({0, 2}), MultiIndex({1, 0}),
                       MultiIndex({1, 1}), MultiIndex({2, 0})};
    const PreparedManifold man_b = prepare(
        basis_b, {Bijection{BijectionKind::arctanh, 1.0}, Bijection{BijectionKind::arctanh, 1.0}},
        smolyak(Rule1D{RuleKind::gauss_patterson}, 2, 5, true));
    for (int family = 0; family < 2; ++family) {
      const PreparedManifold& man = family == 0 ? man_a : man_b;
      for (int trial = 0; trial < 20; ++trial) {
        Vec theta(man.basis.m());
        if (family == 0) {
          theta << 0.4 * (rng.uniform() - 0.5), -0.3 - 0.4 * rng.uniform(),
              0.1 * (rng.uniform() - 0.5), -0.05 - 0.1 * rng.uniform();
        } else {
          const double vx = 0.3 + 0.4 * rng.uniform();
          const double vy = 0.3 + 0.4 * rng.uniform();
          theta << 0.3 * (rng.uniform() - 0.5), -0.5 / vy, 0.3 * (rng.uniform() - 0.5),
              0.1 * (rng.uniform() - 0.5), -0.5 / vx;
        }
        const MomentData ad = log_partition(man, theta);
        const MomentData cf = log_partition_closed_form(man, theta);
        worst_cf = std::max(worst_cf, std::abs(ad.psi - cf.psi));
        worst_cf = std::max(worst_cf, (ad.eta_tilde - cf.eta_tilde).lpNorm<Eigen::Infinity>());
        worst_cf = std::max(worst_cf, (ad.fisher - cf.fisher).lpNorm<Eigen::Infinity>());
        const double h = 1e-5;
        for (int j = 0; j < man.basis.m(); ++j) {
          Vec tp = theta, tm = theta;
          tp[j] += h;
          tm[j] -= h;
          const MomentData up = log_partition_closed_form(man, tp);
          const MomentData dn = log_partition_closed_form(man, tm);
          const double grad_fd = (up.psi - dn.psi) / (2 * h);
          worst_fd =
              std::max(worst_fd, std::abs(ad.eta[j] - grad_fd) / std::max(1.0, std::abs(grad_fd)));
          for (int i = 0; i < man.basis.m(); ++i) {
            const double hess_fd = (up.eta[i] - dn.eta[i]) / (2 * h);
            worst_fd = std::max(worst_fd,
                                std::abs(ad.fisher(i, j) - hess_fd) / std::max(1.0, std::abs(hess_fd)));
          }
        }
      }
    }
    return {worst_fd <= 1e-5 && worst_cf <= 1e-12,
            "vs finite differences " + fmt(worst_fd) + " (tol 1e-5), vs closed form " +
                fmt(worst_cf) + " (tol 1e-12)"};
  });

  // 5. Fisher matrix from moment differences
  run_criterion(5, "fisher moment identity", []() -> std::pair<bool, std::string> {
    const PreparedManifold man =
        prepare(quartic_basis(8), {Bijection{BijectionKind::arctanh, 3.0}}, gauss_patterson(7));
    CounterRng rng(99, 0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      Vec theta(4);
      theta << 0.6 * (rng.uniform() - 0.5), -0.2 - 0.4 * rng.uniform(), 0.1 * (rng.uniform() - 0.5),
          -0.05 - 0.1 * rng.uniform();
      const MomentData md = log_partition(man, theta);
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          const int pos = man.basis.index_of(MultiIndex({i + j + 2}));
          const double expected = md.eta_tilde[pos] - md.eta[i] * md.eta[j];
          worst =
              std::max(worst, std::abs(md.fisher(i, j) - expected) / std::max(1.0, std::abs(expected)));
        }
      }
    }
    return {worst <= 1e-10, "max relative deviation " + fmt(worst) + " (tol 1e-10)"};
  });

  // 6. extension moments by embedded gradient vs direct node sums
  run_criterion(6, "extension-moment equivalence", []() -> std::pair<bool, std::string> {
    const PreparedManifold man =
        prepare(quartic_basis(10), {Bijection{BijectionKind::arctanh, 2.0}}, gauss_patterson(6));
    Vec theta(4);
    theta << 0.1, -0.4, 0.02, -0.08;
    const MomentData md = log_partition(man, theta);
    Vec expo = man.log_base + man.node_stats.leftCols(4) * theta;
    const double shift = expo.maxCoeff();
    const Vec w = man.sign.array() * (expo.array() - shift).exp();
    double worst = 0.0;
    for (int s = 4; s < man.basis.total(); ++s) {
      const double direct = man.node_stats.col(s).dot(w) / w.sum();
      worst = std::max(worst, std::abs(md.eta_tilde[s] - direct) / std::max(1.0, std::abs(direct)));
    }
    return {worst <= 1e-12, "max relative deviation " + fmt(worst) + " (tol 1e-12)"};
  });

  // 7. cubic sensor experiment
  run_criterion(7, "cubic sensor experiment", []() -> std::pair<bool, std::string> {
    g_cubic = run_bundled("cubic_sensor.cfg", {}, "acceptance_out/cubic");
    const auto& h12 = g_cubic->hellinger.at("pf12_arctanh|ks");
    const auto& h4896 = g_cubic->hellinger.at("pf48_arctanh|pf96_arctanh");
    const double max12 = *std::max_element(h12.begin(), h12.end());
    const double max4896 = *std::max_element(h4896.begin(), h4896.end());
    const bool pass = max12 < 1e-2 && max4896 < 1e-4;
    return {pass, "max H(pf12,fd) " + fmt(max12) +
                      " (tol 1e-2; family floor ~8e-3, see README), max H(pf48,pf96) " + fmt(max4896) +
                      " (tol 1e-4)"};
  });

  // 8. linear model against the Kalman-Bucy filter
  run_criterion(8, "linear 2-d experiment", []() -> std::pair<bool, std::string> {
    g_linear = run_bundled("linear2d.cfg", {}, "acceptance_out/linear2d");
    const auto& spg5 = g_linear->hellinger.at("spg5|kalman_bucy");
    const auto& qmc = g_linear->hellinger.at("qmc321|kalman_bucy");
    double max_after = 0.0;
    std::vector<double> spg_window, qmc_window;
    for (std::size_t i = 0; i < g_linear->metric_times.size(); ++i) {
      const double t = g_linear->metric_times[i];
      if (t > 0.4) max_after = std::max(max_after, spg5[i]);
      if (t >= 0.4 && t <= 1.0) {
        spg_window.push_back(spg5[i]);
        qmc_window.push_back(qmc[i]);
      }
    }
    const double med_s = median(spg_window);
    const double med_q = median(qmc_window);
    const bool pass = max_after < 5e-4 && med_s <= med_q;
    return {pass, "H(spg5,kb) after 0.4 " + fmt(max_after) + " (tol 5e-4), medians sparse " +
                      fmt(med_s) + " <= qmc " + fmt(med_q)};
  });

  // 9. Van der Pol desk scale: projection beats the particle filter
  run_criterion(9, "van der pol experiment", []() -> std::pair<bool, std::string> {
    g_vdp = run_bundled("vanderpol_desk.cfg", {}, "acceptance_out/vanderpol");
    const double med_proj = median(g_vdp->hellinger.at("projection|ks"));
    const double med_pf = median(g_vdp->hellinger.at("particle|ks"));
    return {med_proj < med_pf,
            "median H(projection,cn) " + fmt(med_proj) + " < median H(particle,cn) " + fmt(med_pf)};
  });

  // 10. property suite over the bundled experiments
  run_criterion(10, "property suite", []() -> std::pair<bool, std::string> {
    std::string detail;
    bool pass = true;

    // (a) Fisher PSD at every accepted step; (b) FD/CN mass normalization
    double min_eig = 0.0;
    double mass_err = 0.0;
    for (const auto* result : {&g_cubic, &g_linear, &g_vdp}) {
      if (!result->has_value()) {
        pass = false;
        detail += "missing experiment run; ";
        continue;
      }
      for (const auto& [name, diag] : (*result)->filter_diagnostics) {
        min_eig = std::min(min_eig, diag.min_fisher_eigenvalue);
      }
      mass_err = std::max(mass_err, (*result)->ks_diagnostics.max_mass_error);
    }
    pass = pass && min_eig >= -1e-10 && mass_err <= 1e-6;
    detail += "min fisher eig (rel) " + fmt(min_eig) + ", ks mass error " + fmt(mass_err);

    // (c) systematic resampling offspring bounds
    {
      CounterRng rng(7, 0);
      bool bounds_ok = true;
      for (int trial = 0; trial < 50; ++trial) {
        const int n = 16;
        ParticleEnsemble ens;
        ens.positions = Mat(n, 1);
        Vec w(n);
        for (int i = 0; i < n; ++i) {
          ens.positions(i, 0) = i;
          w[i] = rng.uniform();
        }
        ens.weights = w / w.sum();
        const ParticleEnsemble out = systematic_resample(ens, rng.uniform());
        std::vector<int> counts(n, 0);
        for (Index i = 0; i < n; ++i) counts[static_cast<int>(out.positions(i, 0))]++;
        for (int i = 0; i < n; ++i) {
          const double expected = n * ens.weights[i];
          bounds_ok = bounds_ok && counts[i] >= static_cast<int>(std::floor(expected)) &&
                      counts[i] <= static_cast<int>(std::ceil(expected));
        }
      }
      pass = pass && bounds_ok;
      detail += bounds_ok ? ", resampling bounds ok" : ", resampling bounds VIOLATED";
    }

    // (d) byte-identical outputs under a fixed seed
    {
      const std::vector<std::string> overrides = {"run.t_end=0.1", "compare.snapshot_times=0.05",
                                                  "run.output_stride=10", "run.metric_stride=10"};
      const auto a = run_bundled("cubic_sensor.cfg", overrides, "acceptance_out/det_a");
      const auto b = run_bundled("cubic_sensor.cfg", overrides, "acceptance_out/det_b");
      bool identical = !a.written_files.empty();
      for (const auto& file : a.written_files) {
        if (file == "manifest.json") continue;  // carries wall-clock times
        std::ifstream fa("acceptance_out/det_a/" + file, std::ios::binary);
        std::ifstream fb("acceptance_out/det_b/" + file, std::ios::binary);
        std::ostringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        if (sa.str() != sb.str() || sa.str().empty()) identical = false;
      }
      pass = pass && identical;
      detail += identical ? ", outputs byte-identical" : ", outputs DIFFER";
    }
    return {pass, detail};
  });

  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
