#include "epf/reference.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

namespace epf {

Index DensityGrid::size() const {
  Index n = 1;
  for (const auto& a : axes) n *= a.count;
  return n;
}

namespace {

std::vector<int> unflatten(Index flat, const std::vector<GridAxis>& axes) {
  std::vector<int> idx(axes.size());
  for (int a = static_cast<int>(axes.size()) - 1; a >= 0; --a) {
    idx[static_cast<std::size_t>(a)] = static_cast<int>(flat % axes[static_cast<std::size_t>(a)].count);
    flat /= axes[static_cast<std::size_t>(a)].count;
  }
  return idx;
}

Index flatten(const std::vector<int>& idx, const std::vector<GridAxis>& axes) {
  Index flat = 0;
  for (std::size_t a = 0; a < axes.size(); ++a) {
    flat = flat * axes[a].count + idx[a];
  }
  return flat;
}

double axis_trapezoid_weight(const GridAxis& axis, int i) {
  const double w = axis.delta();
  return (i == 0 || i == axis.count - 1) ? 0.5 * w : w;
}

}  // namespace

double DensityGrid::cell_weight(Index flat) const {
  const auto idx = unflatten(flat, axes);
  double w = 1.0;
  for (std::size_t a = 0; a < axes.size(); ++a) w *= axis_trapezoid_weight(axes[a], idx[a]);
  return w;
}

Vec DensityGrid::point(Index flat) const {
  const auto idx = unflatten(flat, axes);
  Vec x(dim());
  for (int a = 0; a < dim(); ++a) x[a] = axes[static_cast<std::size_t>(a)].coordinate(idx[static_cast<std::size_t>(a)]);
  return x;
}

double DensityGrid::mass() const {
  double m = 0.0;
  for (Index i = 0; i < size(); ++i) m += cell_weight(i) * values[i];
  return m;
}

void DensityGrid::normalize() {
  const double m = mass();
  if (!(m > 0.0) || !std::isfinite(m)) throw numerical_error("density grid mass not positive");
  values /= m;
}

double DensityGrid::expectation(const MultiIndex& idx) const {
  if (idx.dim() != dim()) throw structural_error("moment index dimension mismatch");
  double num = 0.0, den = 0.0;
  for (Index i = 0; i < size(); ++i) {
    const Vec x = point(i);
    double mono = 1.0;
    for (int a = 0; a < dim(); ++a) {
      for (int e = 0; e < idx[a]; ++e) mono *= x[a];
    }
    const double w = cell_weight(i) * values[i];
    num += w * mono;
    den += w;
  }
  return num / den;
}

double DensityGrid::boundary_mass_fraction() const {
  double boundary = 0.0, total = 0.0;
  for (Index i = 0; i < size(); ++i) {
    const auto idx = unflatten(i, axes);
    bool on_boundary = false;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      if (idx[a] == 0 || idx[a] == axes[a].count - 1) on_boundary = true;
    }
    const double w = cell_weight(i) * values[i];
    total += w;
    if (on_boundary) boundary += w;
  }
  return total > 0.0 ? boundary / total : 0.0;
}

DensityGrid make_density_grid(std::vector<GridAxis> axes) {
  for (const auto& a : axes) {
    if (a.count < 2 || !(a.hi > a.lo)) throw structural_error("grid axis needs hi > lo and count >= 2");
  }
  DensityGrid g;
  g.axes = std::move(axes);
  g.values = Eigen::ArrayXd::Zero(g.size());
  return g;
}

GaussianBelief kalman_bucy_step(const GaussianBelief& belief, const Vec& dy, double dt,
                                const Mat& A, const Mat& C, const Mat& Q_eff, const Mat& R_eff) {
  if (!(dt > 0.0)) throw domain_error("kalman_bucy_step requires dt > 0");
  const Mat r_inv = R_eff.llt().solve(Mat::Identity(R_eff.rows(), R_eff.cols()));
  const Mat gain = belief.cov * C.transpose() * r_inv;
  GaussianBelief next;
  next.mean = belief.mean + A * belief.mean * dt + gain * (dy - C * belief.mean * dt);
  Mat dp = A * belief.cov + belief.cov * A.transpose() + Q_eff - gain * C * belief.cov;
  next.cov = belief.cov + dp * dt;
  next.cov = 0.5 * (next.cov + next.cov.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> es(next.cov, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw numerical_error("Kalman-Bucy covariance lost positive semidefiniteness");
  return next;
}

Vec gaussian_density_on(const DensityGrid& grid, const GaussianBelief& belief) {
  const int d = grid.dim();
  Eigen::LLT<Mat> llt(belief.cov);
  if (llt.info() != Eigen::Success) throw numerical_error("belief covariance not positive definite");
  const Mat prec = llt.solve(Mat::Identity(d, d));
  double logdet = 0.0;
  for (int i = 0; i < d; ++i) logdet += 2.0 * std::log(llt.matrixL()(i, i));
  const double lognorm = -0.5 * (d * std::log(2.0 * M_PI) + logdet);
  Vec out(grid.size());
  for (Index i = 0; i < grid.size(); ++i) {
    const Vec dx = grid.point(i) - belief.mean;
    out[i] = std::exp(lognorm - 0.5 * dx.dot(prec * dx));
  }
  return out;
}

ParticleEnsemble systematic_resample(const ParticleEnsemble& ens, double u) {
  const Index n = ens.weights.size();
  if (!(u >= 0.0 && u < 1.0)) throw domain_error("resampling uniform must lie in [0,1)");
  ParticleEnsemble out;
  out.positions = Mat(n, ens.positions.cols());
  out.weights = Vec::Constant(n, 1.0 / static_cast<double>(n));
  double cumulative = ens.weights[0];
  Index src = 0;
  for (Index m = 0; m < n; ++m) {
    const double target = (u + static_cast<double>(m)) / static_cast<double>(n);
    while (cumulative < target && src + 1 < n) {
      ++src;
      cumulative += ens.weights[src];
    }
    out.positions.row(m) = ens.positions.row(src);
  }
  return out;
}

ParticleEnsemble particle_filter_step(const ParticleEnsemble& ens, const Vec& dy, double dt,
                                      const ModelSpec& model, CounterRng& rng,
                                      const ParticleFilterOptions& options) {
  if (!(dt > 0.0)) throw domain_error("particle_filter_step requires dt > 0");
  const Index n = ens.positions.rows();
  const double sqrt_dt = std::sqrt(dt);
  const Mat noise_chol = Mat(model.process_noise.llt().matrixL());

  ParticleEnsemble next;
  next.positions = Mat(n, model.dim_x);
  Vec log_weights(n);
  const Vec r_inv = model.observation_noise_diag.cwiseInverse();
  for (Index i = 0; i < n; ++i) {
    const Vec x = ens.positions.row(i).transpose();
    Vec drift(model.dim_x);
    for (int k = 0; k < model.dim_x; ++k) drift[k] = model.drift[static_cast<std::size_t>(k)].eval(x);
    const Vec dw = sqrt_dt * (noise_chol * rng.normal_vec(model.dim_w));
    Vec diffusion = Vec::Zero(model.dim_x);
    for (int k = 0; k < model.dim_x; ++k) {
      for (int a = 0; a < model.dim_w; ++a) {
        const Polynomial& s = model.dispersion[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)];
        if (!s.is_zero()) diffusion[k] += s.eval(x) * dw[a];
      }
    }
    const Vec xp = x + drift * dt + diffusion;
    next.positions.row(i) = xp.transpose();
    double lw = 0.0;
    for (int k = 0; k < model.dim_y; ++k) {
      const double hk = model.observation[static_cast<std::size_t>(k)].eval(xp);
      lw += hk * r_inv[k] * dy[k] - 0.5 * hk * r_inv[k] * hk * dt;
    }
    log_weights[i] = std::log(ens.weights[i]) + lw;
  }
  const double shift = log_weights.maxCoeff();
  Vec w = (log_weights.array() - shift).exp();
  const double total = w.sum();
  if (!(total > 0.0) || !std::isfinite(total))
    throw numerical_error("particle weights degenerated to zero");
  next.weights = w / total;

  const double ess = 1.0 / next.weights.squaredNorm();
  if (options.always_resample || ess < options.ess_fraction * static_cast<double>(n)) {
    next = systematic_resample(next, rng.uniform());
  }
  return next;
}

namespace {

struct OperatorBuild {
  Eigen::SparseMatrix<double> op;
  double max_diffusion_ratio = 0.0;  // dt-free part: sum_k alpha_kk / (2 dx_k^2)
};

OperatorBuild build_fokker_planck(const ModelSpec& model, const std::vector<GridAxis>& axes,
                                  bool reflecting) {
  const int d = model.dim_x;
  Index n = 1;
  for (const auto& a : axes) n *= a.count;
  const auto alpha = model.diffusion_matrix();

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(3 * d + 1));

  // Mirror index for reflecting boundaries; -1 marks a dropped (absorbing)
  // neighbor.
  auto shift_axis = [&](std::vector<int>& idx, int axis, int offset) -> bool {
    int i = idx[static_cast<std::size_t>(axis)] + offset;
    const int count = axes[static_cast<std::size_t>(axis)].count;
    if (i < 0 || i >= count) {
      if (!reflecting) return false;
      i = i < 0 ? -i : 2 * (count - 1) - i;
    }
    idx[static_cast<std::size_t>(axis)] = i;
    return true;
  };
  auto neighbor = [&](std::vector<int> idx, int axis, int offset) -> Index {
    if (!shift_axis(idx, axis, offset)) return -1;
    return flatten(idx, axes);
  };
  auto neighbor2 = [&](std::vector<int> idx, int axis1, int off1, int axis2, int off2) -> Index {
    if (!shift_axis(idx, axis1, off1)) return -1;
    if (!shift_axis(idx, axis2, off2)) return -1;
    return flatten(idx, axes);
  };

  double max_ratio = 0.0;
  for (Index p = 0; p < n; ++p) {
    const auto idx = unflatten(p, axes);
    bool on_boundary = false;
    for (int a = 0; a < d; ++a) {
      if (idx[static_cast<std::size_t>(a)] == 0 ||
          idx[static_cast<std::size_t>(a)] == axes[static_cast<std::size_t>(a)].count - 1)
        on_boundary = true;
    }
    if (on_boundary && !reflecting) continue;  // Dirichlet row: density pinned at 0

    Vec x(d);
    for (int a = 0; a < d; ++a) x[a] = axes[static_cast<std::size_t>(a)].coordinate(idx[static_cast<std::size_t>(a)]);

    auto point_at = [&](int axis, int offset, int axis2 = -1, int offset2 = 0) {
      Vec y = x;
      y[axis] += offset * axes[static_cast<std::size_t>(axis)].delta();
      if (axis2 >= 0) y[axis2] += offset2 * axes[static_cast<std::size_t>(axis2)].delta();
      return y;
    };
    auto add = [&](Index col, double value) {
      if (col >= 0 && value != 0.0) triplets.emplace_back(static_cast<int>(p), static_cast<int>(col), value);
    };

    double ratio = 0.0;
    for (int k = 0; k < d; ++k) {
      const double dx = axes[static_cast<std::size_t>(k)].delta();
      const Polynomial& fk = model.drift[static_cast<std::size_t>(k)];
      if (!fk.is_zero()) {
        add(neighbor(idx, k, +1), -fk.eval(point_at(k, +1)) / (2.0 * dx));
        add(neighbor(idx, k, -1), +fk.eval(point_at(k, -1)) / (2.0 * dx));
      }
      const Polynomial& akk = alpha[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
      if (!akk.is_zero()) {
        add(neighbor(idx, k, +1), 0.5 * akk.eval(point_at(k, +1)) / (dx * dx));
        add(neighbor(idx, k, -1), 0.5 * akk.eval(point_at(k, -1)) / (dx * dx));
        add(p, -akk.eval(x) / (dx * dx));
        ratio += 0.5 * std::abs(akk.eval(x)) / (dx * dx);
      }
      for (int l = k + 1; l < d; ++l) {
        const Polynomial& akl = alpha[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
        if (akl.is_zero()) continue;
        const double dy_ = axes[static_cast<std::size_t>(l)].delta();
        for (int s1 : {-1, +1}) {
          for (int s2 : {-1, +1}) {
            add(neighbor2(idx, k, s1, l, s2),
                s1 * s2 * akl.eval(point_at(k, s1, l, s2)) / (4.0 * dx * dy_));
          }
        }
      }
    }
    max_ratio = std::max(max_ratio, ratio);
  }

  OperatorBuild out;
  out.op = Eigen::SparseMatrix<double>(static_cast<int>(n), static_cast<int>(n));
  out.op.setFromTriplets(triplets.begin(), triplets.end());
  out.max_diffusion_ratio = max_ratio;
  return out;
}

}  // namespace

Eigen::SparseMatrix<double> fokker_planck_operator(const ModelSpec& model,
                                                   const std::vector<GridAxis>& axes,
                                                   bool reflecting) {
  return build_fokker_planck(model, axes, reflecting).op;
}

KushnerSolver::KushnerSolver(const ModelSpec& model, std::vector<GridAxis> axes, double dt,
                             Scheme scheme, const KushnerOptions& options)
    : model_(model), axes_(std::move(axes)), dt_(dt), scheme_(scheme), options_(options) {
  model_.validate();
  if (static_cast<int>(axes_.size()) != model_.dim_x)
    throw structural_error("Kushner grid dimension must match dim_x");
  if (!(dt_ > 0.0)) throw structural_error("Kushner solver requires dt > 0");

  auto build = build_fokker_planck(model_, axes_, options_.reflecting);
  op_ = std::move(build.op);
  if (scheme_ == Scheme::explicit_fd) {
    const double ratio = dt_ * build.max_diffusion_ratio;
    if (ratio > options_.stability_limit) {
      throw structural_error("explicit scheme unstable: dt * max alpha/(2 dx^2) = " +
                             std::to_string(ratio) + " exceeds the configured limit " +
                             std::to_string(options_.stability_limit));
    }
  } else {
    Eigen::SparseMatrix<double> eye(op_.rows(), op_.cols());
    eye.setIdentity();
    Eigen::SparseMatrix<double> lhs = eye - (0.5 * dt_) * op_;
    cn_rhs_ = eye + (0.5 * dt_) * op_;
    cn_solver_ = std::make_unique<Eigen::SparseLU<Eigen::SparseMatrix<double>>>();
    cn_solver_->compute(lhs);
    if (cn_solver_->info() != Eigen::Success)
      throw numerical_error("Crank-Nicolson factorization failed");
  }

  DensityGrid probe = make_density_grid(axes_);
  h_values_ = Mat(probe.size(), model_.dim_y);
  for (Index i = 0; i < probe.size(); ++i) {
    const Vec x = probe.point(i);
    for (int k = 0; k < model_.dim_y; ++k)
      h_values_(i, k) = model_.observation[static_cast<std::size_t>(k)].eval(x);
  }
  r_inv_ = model_.observation_noise_diag.cwiseInverse();
}

void KushnerSolver::apply_gain(DensityGrid& grid, const Vec& dy) {
  if (options_.linear_gain) {
    // grid expectation of h under the current (unnormalized) density
    Vec eh = Vec::Zero(model_.dim_y);
    double mass = 0.0;
    for (Index i = 0; i < grid.size(); ++i) {
      const double w = grid.cell_weight(i) * grid.values[i];
      mass += w;
      eh += w * h_values_.row(i).transpose();
    }
    if (!(mass > 0.0)) throw numerical_error("Kushner density lost all mass");
    eh /= mass;
    for (Index i = 0; i < grid.size(); ++i) {
      double factor = 1.0;
      for (int k = 0; k < model_.dim_y; ++k) {
        factor += (h_values_(i, k) - eh[k]) * r_inv_[k] * (dy[k] - eh[k] * dt_);
      }
      grid.values[i] *= factor;
    }
    return;
  }
  // discrete Bayes factor, shifted by its maximum exponent before
  // exponentiation; renormalization absorbs the shift
  double shift = -std::numeric_limits<double>::infinity();
  Vec expo(grid.size());
  for (Index i = 0; i < grid.size(); ++i) {
    double e = 0.0;
    for (int k = 0; k < model_.dim_y; ++k) {
      const double h = h_values_(i, k);
      e += h * r_inv_[k] * dy[k] - 0.5 * h * r_inv_[k] * h * dt_;
    }
    expo[i] = e;
    if (grid.values[i] > 0.0) shift = std::max(shift, e);
  }
  for (Index i = 0; i < grid.size(); ++i) {
    grid.values[i] *= std::exp(expo[i] - shift);
  }
}

void KushnerSolver::step(DensityGrid& grid, const Vec& dy) {
  if (grid.axes.size() != axes_.size() || grid.size() != op_.rows())
    throw structural_error("density grid does not match the solver grid");
  Eigen::VectorXd v = grid.values.matrix();
  if (scheme_ == Scheme::explicit_fd) {
    v += dt_ * (op_ * v);
  } else {
    v = cn_solver_->solve(cn_rhs_ * v);
    if (cn_solver_->info() != Eigen::Success) throw numerical_error("Crank-Nicolson solve failed");
  }
  grid.values = v.array();
  apply_gain(grid, dy);
  // clamp negatives; anything below -1e-8 counts as a diagnostic event
  for (Index i = 0; i < grid.size(); ++i) {
    if (grid.values[i] < 0.0) {
      if (grid.values[i] < -1e-8) ++diag_.clamped_negative;
      grid.values[i] = 0.0;
    }
  }
  if (!options_.reflecting) {
    diag_.max_boundary_mass = std::max(diag_.max_boundary_mass, grid.boundary_mass_fraction());
    // Dirichlet boundary: keep the layer at zero
    for (Index i = 0; i < grid.size(); ++i) {
      const auto idx = unflatten(i, grid.axes);
      for (std::size_t a = 0; a < grid.axes.size(); ++a) {
        if (idx[a] == 0 || idx[a] == grid.axes[a].count - 1) {
          grid.values[i] = 0.0;
          break;
        }
      }
    }
  }
  grid.normalize();
  diag_.max_mass_error = std::max(diag_.max_mass_error, std::abs(grid.mass() - 1.0));
}

DensityGrid kde_density(const ParticleEnsemble& ens, const std::vector<GridAxis>& axes) {
  const Index n = ens.positions.rows();
  const int d = static_cast<int>(ens.positions.cols());
  if (n < 2) throw domain_error("kernel density estimate needs at least 2 particles");

  const Vec mean = ens.positions.transpose() * ens.weights;
  Mat cov = Mat::Zero(d, d);
  for (Index i = 0; i < n; ++i) {
    const Vec dx = ens.positions.row(i).transpose() - mean;
    cov += ens.weights[i] * dx * dx.transpose();
  }
  cov = 0.5 * (cov + cov.transpose());
  Eigen::LLT<Mat> llt(cov);
  if (llt.info() != Eigen::Success) {
    cov.diagonal().array() += 1e-12;
    llt.compute(cov);
    if (llt.info() != Eigen::Success) throw numerical_error("sample covariance not factorizable");
  }
  const double scott = std::pow(static_cast<double>(n), -1.0 / (d + 4));
  const Mat kernel_cov = scott * scott * cov;
  Eigen::LLT<Mat> kllt(kernel_cov);
  const Mat prec = kllt.solve(Mat::Identity(d, d));
  double logdet = 0.0;
  for (int i = 0; i < d; ++i) logdet += 2.0 * std::log(kllt.matrixL()(i, i));
  const double norm = std::exp(-0.5 * (d * std::log(2.0 * M_PI) + logdet));

  DensityGrid grid = make_density_grid(axes);
  if (d == 2) {
    const GridAxis& ax = axes[0];
    const GridAxis& ay = axes[1];
    Eigen::ArrayXd gx(ax.count), gy(ay.count);
    for (int i = 0; i < ax.count; ++i) gx[i] = ax.coordinate(i);
    for (int j = 0; j < ay.count; ++j) gy[j] = ay.coordinate(j);
    Eigen::ArrayXXd accum = Eigen::ArrayXXd::Zero(ax.count, ay.count);
    const double a = prec(0, 0), b = prec(0, 1), c = prec(1, 1);
    // kernel support window: beyond exponent -30 a kernel contributes < 1e-13
    Eigen::SelfAdjointEigenSolver<Mat> es(prec);
    const double radius = std::sqrt(60.0 / es.eigenvalues().minCoeff());
    for (Index i = 0; i < n; ++i) {
      const double px = ens.positions(i, 0);
      const double py = ens.positions(i, 1);
      const int x_lo = std::max(0, static_cast<int>(std::ceil((px - radius - ax.lo) / ax.delta())));
      const int x_hi = std::min(ax.count - 1, static_cast<int>(std::floor((px + radius - ax.lo) / ax.delta())));
      const int y_lo = std::max(0, static_cast<int>(std::ceil((py - radius - ay.lo) / ay.delta())));
      const int y_hi = std::min(ay.count - 1, static_cast<int>(std::floor((py + radius - ay.lo) / ay.delta())));
      if (x_lo > x_hi || y_lo > y_hi) continue;
      const int nx = x_hi - x_lo + 1;
      const int ny = y_hi - y_lo + 1;
      const Eigen::ArrayXd dx = gx.segment(x_lo, nx) - px;
      const Eigen::ArrayXd dy = gy.segment(y_lo, ny) - py;
      Eigen::MatrixXd expo = (-0.5 * a * dx.square()).matrix() * Eigen::RowVectorXd::Ones(ny);
      expo.noalias() += Eigen::VectorXd::Ones(nx) * (-0.5 * c * dy.square()).matrix().transpose();
      expo.noalias() += (-b) * (dx.matrix() * dy.matrix().transpose());
      accum.block(x_lo, y_lo, nx, ny) += ens.weights[i] * expo.array().exp();
    }
    for (int i = 0; i < ax.count; ++i) {
      for (int j = 0; j < ay.count; ++j) {
        grid.values[static_cast<Index>(i) * ay.count + j] = norm * accum(i, j);
      }
    }
  } else {
    for (Index g = 0; g < grid.size(); ++g) {
      const Vec x = grid.point(g);
      double acc = 0.0;
      for (Index i = 0; i < n; ++i) {
        const Vec dx = x - ens.positions.row(i).transpose();
        acc += ens.weights[i] * std::exp(-0.5 * dx.dot(prec * dx));
      }
      grid.values[g] = norm * acc;
    }
  }
  grid.normalize();
  return grid;
}

SdeSimulation simulate_sde(const ModelSpec& model, const Vec& x0, double dt, int n_steps,
                           CounterRng& rng) {
  if (!(dt > 0.0)) throw domain_error("simulate_sde requires dt > 0");
  if (x0.size() != model.dim_x) throw structural_error("x0 dimension mismatch");
  const double sqrt_dt = std::sqrt(dt);
  const Mat noise_chol = Mat(model.process_noise.llt().matrixL());
  const Vec obs_std = model.observation_noise_diag.cwiseSqrt();

  SdeSimulation sim;
  sim.states = Mat(n_steps + 1, model.dim_x);
  sim.path.dt = dt;
  sim.path.increments = Mat(n_steps, model.dim_y);
  Vec x = x0;
  sim.states.row(0) = x.transpose();
  for (int t = 0; t < n_steps; ++t) {
    for (int k = 0; k < model.dim_y; ++k) {
      const double hk = model.observation[static_cast<std::size_t>(k)].eval(x);
      sim.path.increments(t, k) = hk * dt + obs_std[k] * sqrt_dt * rng.normal();
    }
    Vec drift(model.dim_x);
    for (int k = 0; k < model.dim_x; ++k) drift[k] = model.drift[static_cast<std::size_t>(k)].eval(x);
    const Vec dw = sqrt_dt * (noise_chol * rng.normal_vec(model.dim_w));
    Vec diffusion = Vec::Zero(model.dim_x);
    for (int k = 0; k < model.dim_x; ++k) {
      for (int a = 0; a < model.dim_w; ++a) {
        const Polynomial& s = model.dispersion[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)];
        if (!s.is_zero()) diffusion[k] += s.eval(x) * dw[a];
      }
    }
    x = x + drift * dt + diffusion;
    sim.states.row(t + 1) = x.transpose();
  }
  return sim;
}

}  // namespace epf
