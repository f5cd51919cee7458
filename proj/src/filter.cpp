#include "epf/filter.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

namespace epf {

FilterState make_state(const PreparedManifold& man, const Vec& theta0, double time) {
  FilterState s;
  s.time = time;
  s.theta = theta0;
  s.moments = log_partition(man, theta0);
  return s;
}

Vec filter_drift(const FilterState& state, const CoefficientSet& coeffs,
                 const StepControl& control, double* solve_residual, double* jitter_used) {
  const MomentData& md = state.moments;
  const Vec rhs = coeffs.a0 + coeffs.b0 * md.eta +
                  (coeffs.A0 + md.eta * coeffs.bh.transpose()) * md.eta_tilde;
  const Mat& g = md.fisher;
  const double scale = std::max(g.lpNorm<Eigen::Infinity>(), 1e-300);
  const double rhs_norm = rhs.norm();

  double jitter = 0.0;
  for (;;) {
    Mat reg = g;
    if (jitter > 0.0) reg.diagonal().array() += jitter;
    Eigen::LLT<Mat> llt(reg);
    if (llt.info() == Eigen::Success) {
      const Vec x = llt.solve(rhs);
      const double residual = (reg * x - rhs).norm();
      if (residual <= control.residual_tolerance * std::max(rhs_norm, 1e-300) ||
          jitter >= control.jitter_max_factor * scale) {
        if (solve_residual) *solve_residual = residual / std::max(rhs_norm, 1e-300);
        if (jitter_used) *jitter_used = jitter;
        if (residual > control.residual_tolerance * std::max(rhs_norm, 1e-300))
          throw numerical_error("Fisher solve residual above tolerance at maximum jitter");
        return x;
      }
    }
    if (jitter == 0.0) {
      jitter = control.jitter_start_factor * scale;
    } else if (jitter < control.jitter_max_factor * scale) {
      jitter = std::min(jitter * 10.0, control.jitter_max_factor * scale);
    } else {
      throw numerical_error("Fisher matrix factorization failed at maximum jitter");
    }
  }
}

FilterState filter_step(const FilterState& state, const Vec& dy, double dt,
                        const CoefficientSet& coeffs, const PreparedManifold& man,
                        const StepControl& control) {
  if (dt < 0.0) throw domain_error("filter step requires dt >= 0");
  if (dy.size() != coeffs.lambda.cols()) throw structural_error("dy dimension mismatch");
  const Vec update = coeffs.lambda * dy;
  Vec theta_new = state.theta + filter_drift(state, coeffs, control) * dt + update;
  if (control.heun) {
    FilterState predictor;
    predictor.time = state.time + dt;
    predictor.theta = theta_new;
    predictor.moments = log_partition(man, theta_new);
    const Vec d0 = filter_drift(state, coeffs, control);
    const Vec d1 = filter_drift(predictor, coeffs, control);
    theta_new = state.theta + 0.5 * (d0 + d1) * dt + update;
  }
  FilterState next;
  next.time = state.time + dt;
  next.theta = theta_new;
  next.moments = log_partition(man, theta_new);
  return next;
}

std::vector<FilterState> run_filter(const Vec& theta0, const MeasurementPath& path,
                                    const CoefficientSet& coeffs, const PreparedManifold& man,
                                    const StepControl& control, int stride,
                                    RunDiagnostics* diagnostics) {
  if (stride < 1) throw domain_error("stride must be >= 1");
  if (path.increments.rows() > 0 && !(path.dt > 0.0))
    throw domain_error("measurement path requires dt > 0");

  FilterState state = make_state(man, theta0);
  std::vector<FilterState> out;
  out.push_back(state);

  RunDiagnostics diag;
  diag.min_fisher_eigenvalue = std::numeric_limits<double>::infinity();
  auto observe = [&](const FilterState& s, double residual, double jitter) {
    Eigen::SelfAdjointEigenSolver<Mat> es(s.moments.fisher, Eigen::EigenvaluesOnly);
    const double scale = std::max(1.0, s.moments.fisher.lpNorm<Eigen::Infinity>());
    diag.min_fisher_eigenvalue =
        std::min(diag.min_fisher_eigenvalue, es.eigenvalues().minCoeff() / scale);
    diag.max_solve_residual = std::max(diag.max_solve_residual, residual);
    diag.max_jitter_used = std::max(diag.max_jitter_used, jitter);
  };
  observe(state, 0.0, 0.0);

  const int n = static_cast<int>(path.increments.rows());
  for (int k = 0; k < n; ++k) {
    try {
      // recompute the drift here so solve diagnostics are captured per step
      double residual = 0.0, jitter = 0.0;
      const Vec drift = filter_drift(state, coeffs, control, &residual, &jitter);
      Vec theta_new = state.theta + drift * path.dt + coeffs.lambda * path.increments.row(k).transpose();
      if (control.heun) {
        FilterState predictor;
        predictor.time = state.time + path.dt;
        predictor.theta = theta_new;
        predictor.moments = log_partition(man, theta_new);
        const Vec d1 = filter_drift(predictor, coeffs, control);
        theta_new = state.theta + 0.5 * (drift + d1) * path.dt +
                     coeffs.lambda * path.increments.row(k).transpose();
      }
      FilterState next;
      next.time = state.time + path.dt;
      next.theta = std::move(theta_new);
      next.moments = log_partition(man, next.theta);
      state = std::move(next);
      observe(state, residual, jitter);
    } catch (const Error& e) {
      throw StepFailure(k, state.theta, std::string(e.what()) + " at step " + std::to_string(k));
    }
    diag.steps = k + 1;
    if ((k + 1) % stride == 0 || k + 1 == n) out.push_back(state);
  }
  if (diagnostics) *diagnostics = diag;
  return out;
}

}  // namespace epf
