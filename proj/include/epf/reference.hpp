#pragma once

#include <memory>
#include <vector>

#include <Eigen/Sparse>

#include "epf/filter.hpp"
#include "epf/model.hpp"
#include "epf/multi_index.hpp"
#include "epf/rng.hpp"
#include "epf/types.hpp"

namespace epf {

struct GridAxis {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
  double delta() const { return (hi - lo) / (count - 1); }
  double coordinate(int i) const { return lo + i * delta(); }
};

/// Rectangular evaluation grid with density values, flattened row-major
/// (axis 0 slowest). Common currency for Hellinger comparisons.
struct DensityGrid {
  std::vector<GridAxis> axes;
  Eigen::ArrayXd values;

  int dim() const { return static_cast<int>(axes.size()); }
  Index size() const;
  /// Product-trapezoid quadrature weight of a flattened cell.
  double cell_weight(Index flat) const;
  Vec point(Index flat) const;
  double mass() const;
  void normalize();
  /// Trapezoid expectation of x^idx under the (normalized) grid density.
  double expectation(const MultiIndex& idx) const;
  /// Fraction of mass on the outermost cell layer; boundary-leak diagnostic.
  double boundary_mass_fraction() const;
};

DensityGrid make_density_grid(std::vector<GridAxis> axes);

/// Mean/covariance belief of the Kalman-Bucy filter.
struct GaussianBelief {
  Vec mean;
  Mat cov;
};

/// One Euler step of the Kalman-Bucy equations
///   dm = A m dt + P C^T R^{-1} (dy - C m dt)
///   dP = (A P + P A^T + Q - P C^T R^{-1} C P) dt
/// with re-symmetrized covariance; throws if P falls non-PSD beyond -1e-10.
GaussianBelief kalman_bucy_step(const GaussianBelief& belief, const Vec& dy, double dt,
                                const Mat& A, const Mat& C, const Mat& Q_eff, const Mat& R_eff);

Vec gaussian_density_on(const DensityGrid& grid, const GaussianBelief& belief);

struct ParticleEnsemble {
  Mat positions;  // N x dim_x
  Vec weights;    // sums to 1
};

/// Systematic (stratified inverse-CDF) resampling with the given uniform in
/// [0,1). Exposed separately so the offspring-count guarantees are testable.
ParticleEnsemble systematic_resample(const ParticleEnsemble& ens, double u);

struct ParticleFilterOptions {
  bool always_resample = false;
  double ess_fraction = 0.5;  // resample when ESS < ess_fraction * N
};

/// Bootstrap step: Euler-Maruyama propagation, continuous-time likelihood
/// weight update exp(h^T R^{-1} dy - 1/2 h^T R^{-1} h dt) stabilized by the
/// max log-weight, then systematic resampling when ESS drops below threshold.
ParticleEnsemble particle_filter_step(const ParticleEnsemble& ens, const Vec& dy, double dt,
                                      const ModelSpec& model, CounterRng& rng,
                                      const ParticleFilterOptions& options = {});

struct KushnerOptions {
  double stability_limit = 0.25;  // explicit scheme: max dt sum_k alpha_kk / (2 dx_k^2)
  bool reflecting = false;        // mirror boundaries instead of absorbing
  bool linear_gain = false;       // first-order expansion of the Bayes factor
};

struct KushnerDiagnostics {
  long clamped_negative = 0;  // grid points clamped below -1e-8
  double max_boundary_mass = 0.0;
  double max_mass_error = 0.0;  // |mass - 1| after per-step renormalization
};

/// Finite-difference solvers for the Kushner-Stratonovich equation on a
/// rectangular grid: central differences for the Fokker-Planck operator plus
/// a multiplicative gain and per-step renormalization. The default gain is
/// the discrete Bayes factor p <- p exp(h^T R^{-1} dy - 1/2 h^T R^{-1} h dt),
/// stabilized by its maximum exponent; the first-order expansion
/// p <- p (1 + (h - E h)^T R^{-1} (dy - E h dt)) is kept behind linear_gain
/// for cross-checks. The operator is assembled once (time-invariant models).
/// Explicit stepping checks the von Neumann ratio at construction;
/// Crank-Nicolson reuses one sparse factorization for the whole run.
class KushnerSolver {
 public:
  enum class Scheme { explicit_fd, crank_nicolson };

  KushnerSolver(const ModelSpec& model, std::vector<GridAxis> axes, double dt, Scheme scheme,
                const KushnerOptions& options = {});

  void step(DensityGrid& grid, const Vec& dy);
  double dt() const { return dt_; }
  const KushnerDiagnostics& diagnostics() const { return diag_; }

 private:
  void apply_gain(DensityGrid& grid, const Vec& dy);

  ModelSpec model_;
  std::vector<GridAxis> axes_;
  double dt_;
  Scheme scheme_;
  KushnerOptions options_;
  Eigen::SparseMatrix<double> op_;       // Fokker-Planck generator
  Eigen::SparseMatrix<double> cn_rhs_;   // I + dt/2 L
  std::unique_ptr<Eigen::SparseLU<Eigen::SparseMatrix<double>>> cn_solver_;
  Mat h_values_;  // grid point -> h(x), N x dim_y
  Vec r_inv_;
  KushnerDiagnostics diag_;
};

/// Central-difference discretization of the Fokker-Planck generator on the
/// grid (absorbing rows zeroed, or mirror stencils when reflecting).
Eigen::SparseMatrix<double> fokker_planck_operator(const ModelSpec& model,
                                                   const std::vector<GridAxis>& axes,
                                                   bool reflecting);

/// Gaussian kernel density estimate with bandwidth matrix equal to the
/// Scott factor N^{-1/(d+4)} times the Cholesky factor of the weighted
/// sample covariance; normalized on the grid.
DensityGrid kde_density(const ParticleEnsemble& ens, const std::vector<GridAxis>& axes);

struct SdeSimulation {
  Mat states;  // (n_steps + 1) x dim_x
  MeasurementPath path;
};

/// Euler-Maruyama simulation of the model plus measurement increments
/// dy = h(x) dt + sqrt(R dt) xi, deterministic under a fixed rng stream.
SdeSimulation simulate_sde(const ModelSpec& model, const Vec& x0, double dt, int n_steps,
                           CounterRng& rng);

}  // namespace epf
