#pragma once

#include <vector>

#include "epf/basis.hpp"
#include "epf/expfam.hpp"
#include "epf/types.hpp"

namespace epf {

/// Natural parameters with the moment cache at the current time.
struct FilterState {
  double time = 0.0;
  Vec theta;
  MomentData moments;
};

/// Fixed-step measurement increments Delta y.
struct MeasurementPath {
  double dt = 0.0;
  Mat increments;  // n_t x dim_y
};

struct StepControl {
  bool heun = false;  // midpoint-in-drift corrector, for convergence checks
  double jitter_start_factor = 1e-10;
  double jitter_max_factor = 1e-6;
  double residual_tolerance = 1e-8;
};

/// Per-run health counters filled by run().
struct RunDiagnostics {
  int steps = 0;
  double min_fisher_eigenvalue = 0.0;  // relative to the matrix infinity norm
  double max_solve_residual = 0.0;  // relative to |rhs|
  double max_jitter_used = 0.0;
};

/// Step failure, carrying the failing step index and the rejected theta.
class StepFailure : public Error {
 public:
  StepFailure(int step, Vec theta, const std::string& what)
      : Error(Error::Kind::numerical, what), step_(step), theta_(std::move(theta)) {}
  int step() const { return step_; }
  const Vec& theta() const { return theta_; }

 private:
  int step_;
  Vec theta_;
};

FilterState make_state(const PreparedManifold& man, const Vec& theta0, double time = 0.0);

/// Drift of the parameter SDE: g^{-1} (a0 + b0 eta + (A0 + eta bh^T) eta_tilde),
/// solved by LLT with escalating diagonal jitter on factorization failure.
Vec filter_drift(const FilterState& state, const CoefficientSet& coeffs,
                 const StepControl& control = {}, double* solve_residual = nullptr,
                 double* jitter_used = nullptr);

/// Euler-Maruyama step theta <- theta + drift dt + lambda dy, with moments
/// recomputed at the new theta. The lambda0 constant in h needs no shift of
/// dy here: with a0/A0/b0/bh assembled from the full 1/2|h|^2, the update
/// coefficient of the EM(c*) equation is exactly lambda.
FilterState filter_step(const FilterState& state, const Vec& dy, double dt,
                        const CoefficientSet& coeffs, const PreparedManifold& man,
                        const StepControl& control = {});

/// Sequential fold of filter_step over the path. Returns states at stride
/// (always including the initial and final states). Step failures are
/// rethrown as StepFailure with the step index.
std::vector<FilterState> run_filter(const Vec& theta0, const MeasurementPath& path,
                                    const CoefficientSet& coeffs, const PreparedManifold& man,
                                    const StepControl& control = {}, int stride = 1,
                                    RunDiagnostics* diagnostics = nullptr);

}  // namespace epf
