#include <doctest.h>

#include <cmath>
#include <map>

#include "epf/reference.hpp"

using namespace epf;

namespace {

MultiIndex mi(std::vector<int> e) { return MultiIndex(std::move(e)); }

ModelSpec pure_diffusion_1d(double sigma) {
  ModelSpec m;
  m.dim_x = m.dim_w = m.dim_y = 1;
  m.drift = {Polynomial(1)};
  m.dispersion = {{Polynomial::constant(1, sigma)}};
  m.process_noise = Mat::Identity(1, 1);
  m.observation = {Polynomial(1)};
  m.observation_noise_diag = Vec::Ones(1);
  return m;
}

ModelSpec linear2d_raw(double sigma_w = 1.0, double sigma_v = 0.1) {
  ModelSpec m;
  m.dim_x = m.dim_w = m.dim_y = 2;
  Polynomial f1(2), f2(2), h1(2), h2(2);
  f1.add_term(mi({1, 0}), -1.0);
  f2.add_term(mi({0, 1}), -1.0);
  h1.add_term(mi({1, 0}), -1.0);
  h2.add_term(mi({0, 1}), -1.0);
  m.drift = {f1, f2};
  m.dispersion = {{Polynomial::constant(2, sigma_w), Polynomial(2)},
                  {Polynomial(2), Polynomial::constant(2, sigma_w)}};
  m.process_noise = Mat::Identity(2, 2);
  m.observation = {h1, h2};
  m.observation_noise_diag = Vec::Constant(2, sigma_v * sigma_v);
  return m;
}

double grid_variance_1d(const DensityGrid& g) {
  const double mean = g.expectation(mi({1}));
  return g.expectation(mi({2})) - mean * mean;
}

}  // namespace

TEST_CASE("kalman-bucy step") {
  const Mat A = -Mat::Identity(2, 2);
  const Mat C = 2.0 * Mat::Identity(2, 2);
  const Mat Q = 0.5 * Mat::Identity(2, 2);
  const Mat R = 0.04 * Mat::Identity(2, 2);
  GaussianBelief b{Vec::Ones(2), 0.3 * Mat::Identity(2, 2)};

  SUBCASE("perfectly predicted measurement moves only the prior mean") {
    const double dt = 1e-3;
    const Vec dy = C * b.mean * dt;
    const GaussianBelief next = kalman_bucy_step(b, dy, dt, A, C, Q, R);
    CHECK((next.mean - (b.mean + A * b.mean * dt)).norm() < 1e-15);
  }
  SUBCASE("stationary variance of the scalar riccati equation") {
    // a=-1, c=-1, q=1, r=0.01: P_inf = r(-1+sqrt(1+q/r)) ~ 0.090499
    GaussianBelief s{Vec::Zero(1), Mat::Identity(1, 1)};
    const Mat a = -Mat::Identity(1, 1), c = -Mat::Identity(1, 1);
    const Mat q = Mat::Identity(1, 1), r = 0.01 * Mat::Identity(1, 1);
    const double dt = 1e-3;
    for (int i = 0; i < 20000; ++i) {
      const Vec dy = c * s.mean * dt;  // keeps the mean fixed; P is autonomous
      s = kalman_bucy_step(s, dy, dt, a, c, q, r);
    }
    CHECK(s.cov(0, 0) == doctest::Approx(0.090499).epsilon(2e-3));
    CHECK(std::abs(s.cov(0, 0) - 0.0904987) < 1e-4);
  }
  SUBCASE("pure information gain shrinks the covariance") {
    GaussianBelief s{Vec::Zero(1), Mat::Identity(1, 1)};
    const Mat a = Mat::Zero(1, 1), c = Mat::Identity(1, 1);
    const Mat q = Mat::Zero(1, 1), r = 0.1 * Mat::Identity(1, 1);
    double last = s.cov(0, 0);
    for (int i = 0; i < 100; ++i) {
      s = kalman_bucy_step(s, Vec::Zero(1), 1e-2, a, c, q, r);
      CHECK(s.cov(0, 0) < last);
      last = s.cov(0, 0);
    }
  }
}

TEST_CASE("systematic resampling") {
  SUBCASE("equal weights copy every particle once") {
    ParticleEnsemble ens;
    ens.positions = Mat::Random(6, 2);
    ens.weights = Vec::Constant(6, 1.0 / 6);
    for (double u : {1e-9, 0.25, 0.5, 0.99}) {
      const ParticleEnsemble out = systematic_resample(ens, u);
      CHECK((out.positions - ens.positions).norm() == 0.0);
    }
  }
  SUBCASE("half-half weights give offspring counts (2,2,0,0)") {
    ParticleEnsemble ens;
    ens.positions = Mat(4, 1);
    ens.positions << 1.0, 2.0, 3.0, 4.0;
    ens.weights = Vec(4);
    ens.weights << 0.5, 0.5, 0.0, 0.0;
    for (double u : {0.01, 0.3, 0.77, 0.999}) {
      const ParticleEnsemble out = systematic_resample(ens, u);
      std::map<double, int> counts;
      for (Index i = 0; i < 4; ++i) counts[out.positions(i, 0)]++;
      CHECK(counts[1.0] == 2);
      CHECK(counts[2.0] == 2);
    }
  }
  SUBCASE("offspring counts satisfy the floor/ceiling bounds") {
    CounterRng rng(3, 0);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 8;
      ParticleEnsemble ens;
      ens.positions = Mat(n, 1);
      Vec w(n);
      for (int i = 0; i < n; ++i) {
        ens.positions(i, 0) = i;
        w[i] = rng.uniform();
      }
      ens.weights = w / w.sum();
      const ParticleEnsemble out = systematic_resample(ens, rng.uniform());
      std::map<double, int> counts;
      for (Index i = 0; i < n; ++i) counts[out.positions(i, 0)]++;
      for (int i = 0; i < n; ++i) {
        const double expected = n * ens.weights[i];
        CHECK(counts[i] >= static_cast<int>(std::floor(expected)));
        CHECK(counts[i] <= static_cast<int>(std::ceil(expected)));
      }
    }
  }
}

TEST_CASE("particle filter step") {
  ModelSpec m = pure_diffusion_1d(0.5);
  CounterRng rng(11, 0);
  ParticleEnsemble ens;
  ens.positions = Mat(64, 1);
  for (int i = 0; i < 64; ++i) ens.positions(i, 0) = rng.normal();
  ens.weights = Vec::Constant(64, 1.0 / 64);

  SUBCASE("h = 0 leaves the weights untouched") {
    Vec dy(1);
    dy << 0.3;
    const ParticleEnsemble out = particle_filter_step(ens, dy, 1e-2, m, rng);
    CHECK((out.weights - ens.weights).lpNorm<Eigen::Infinity>() < 1e-15);
  }
  SUBCASE("informative observations reweight the ensemble") {
    m.observation = {Polynomial::monomial(mi({1}))};
    Vec dy(1);
    dy << 0.5;
    const ParticleEnsemble out = particle_filter_step(ens, dy, 1e-2, m, rng);
    CHECK(std::abs(out.weights.sum() - 1.0) < 1e-12);
    CHECK(out.weights.minCoeff() >= 0.0);
    // particles to the right of the mean gain weight under a positive dy
    double high = 0.0, low = 0.0;
    for (Index i = 0; i < 64; ++i) {
      (out.positions(i, 0) > 0 ? high : low) += out.weights[i];
    }
    CHECK(high > low);
  }
}

TEST_CASE("explicit kushner solver") {
  SUBCASE("pure diffusion grows the variance by sigma^2 dt per step") {
    const ModelSpec m = pure_diffusion_1d(1.0);
    const std::vector<GridAxis> axes = {{-8.0, 8.0, 641}};
    const double dt = 2e-5;
    KushnerSolver solver(m, axes, dt, KushnerSolver::Scheme::explicit_fd);
    DensityGrid grid = make_density_grid(axes);
    grid.values = gaussian_density_on(grid, GaussianBelief{Vec::Zero(1), Mat::Identity(1, 1)}).array();
    grid.normalize();
    const double var0 = grid_variance_1d(grid);
    const int n = 50;
    for (int i = 0; i < n; ++i) solver.step(grid, Vec::Zero(1));
    const double var1 = grid_variance_1d(grid);
    CHECK(var1 - var0 == doctest::Approx(n * dt).epsilon(1e-3));
  }
  SUBCASE("stability guard rejects an unstable ratio") {
    const ModelSpec m = pure_diffusion_1d(1.0);
    const std::vector<GridAxis> axes = {{-5.0, 5.0, 2001}};
    CHECK_THROWS_AS(KushnerSolver(m, axes, 1e-3, KushnerSolver::Scheme::explicit_fd), Error);
  }
  SUBCASE("a perfectly predicted measurement leaves the linear gain silent") {
    ModelSpec with_h = pure_diffusion_1d(1.0);
    with_h.observation = {Polynomial::monomial(mi({1}))};  // odd h, symmetric density
    const ModelSpec without_h = pure_diffusion_1d(1.0);
    const std::vector<GridAxis> axes = {{-8.0, 8.0, 401}};
    const double dt = 5e-5;
    KushnerOptions linear;
    linear.linear_gain = true;
    KushnerSolver a(with_h, axes, dt, KushnerSolver::Scheme::explicit_fd, linear);
    KushnerSolver b(without_h, axes, dt, KushnerSolver::Scheme::explicit_fd, linear);
    DensityGrid ga = make_density_grid(axes);
    ga.values = gaussian_density_on(ga, GaussianBelief{Vec::Zero(1), Mat::Identity(1, 1)}).array();
    ga.normalize();
    DensityGrid gb = ga;
    a.step(ga, Vec::Zero(1));  // dy = E h dt = 0
    b.step(gb, Vec::Zero(1));
    CHECK((ga.values - gb.values).matrix().lpNorm<Eigen::Infinity>() < 1e-13);
  }
}

TEST_CASE("explicit solver tracks the kalman-bucy mean on the linear model") {
  const ModelSpec m = linear2d_raw();
  const std::vector<GridAxis> axes = {{-3.0, 3.0, 81}, {-3.0, 3.0, 81}};
  const double dt = 1e-3;
  KushnerSolver solver(m, axes, dt, KushnerSolver::Scheme::explicit_fd);
  DensityGrid grid = make_density_grid(axes);
  const GaussianBelief prior{Vec::Zero(2), 0.09 * Mat::Identity(2, 2)};
  grid.values = gaussian_density_on(grid, prior).array();
  grid.normalize();

  GaussianBelief kb = prior;
  const Mat A = -Mat::Identity(2, 2), C = -Mat::Identity(2, 2);
  const Mat Q = Mat::Identity(2, 2), R = 0.01 * Mat::Identity(2, 2);

  CounterRng rng(29, 0);
  Vec x(2);
  x << 0.3, -0.2;
  const double dx = axes[0].delta();
  for (int t = 0; t < 1000; ++t) {
    Vec dy(2);
    for (int k = 0; k < 2; ++k) dy[k] = -x[k] * dt + 0.1 * std::sqrt(dt) * rng.normal();
    x += -x * dt + std::sqrt(dt) * rng.normal_vec(2);
    solver.step(grid, dy);
    kb = kalman_bucy_step(kb, dy, dt, A, C, Q, R);
    if ((t + 1) % 100 == 0) {
      CHECK(std::abs(grid.expectation(mi({1, 0})) - kb.mean[0]) < 2 * dx);
      CHECK(std::abs(grid.expectation(mi({0, 1})) - kb.mean[1]) < 2 * dx);
    }
  }
}

TEST_CASE("crank-nicolson matches two explicit half steps to second order") {
  const ModelSpec m = pure_diffusion_1d(1.0);
  const std::vector<GridAxis> axes = {{-8.0, 8.0, 401}};
  DensityGrid init = make_density_grid(axes);
  init.values = gaussian_density_on(init, GaussianBelief{Vec::Zero(1), Mat::Identity(1, 1)}).array();
  init.normalize();

  auto gap_at = [&](double dt) {
    KushnerSolver cn(m, axes, dt, KushnerSolver::Scheme::crank_nicolson);
    KushnerSolver ex(m, axes, 0.5 * dt, KushnerSolver::Scheme::explicit_fd);
    DensityGrid a = init, b = init;
    cn.step(a, Vec::Zero(1));
    ex.step(b, Vec::Zero(1));
    ex.step(b, Vec::Zero(1));
    return (a.values - b.values).matrix().lpNorm<Eigen::Infinity>();
  };
  const double coarse = gap_at(4e-4);
  const double fine = gap_at(2e-4);
  CHECK(fine < 0.35 * coarse);  // one order beyond first
}

TEST_CASE("reflecting operator conserves rectangle mass for pure diffusion") {
  const ModelSpec m = pure_diffusion_1d(1.0);
  const std::vector<GridAxis> axes = {{-4.0, 4.0, 201}};
  const auto op = fokker_planck_operator(m, axes, true);
  Vec v(201);
  for (int i = 0; i < 201; ++i) v[i] = std::exp(-0.5 * axes[0].coordinate(i) * axes[0].coordinate(i));
  const Vec dv = op * v;
  // the mirror stencil conserves the trapezoid mass
  double mass_rate = 0.0;
  for (int i = 0; i < 201; ++i) {
    const double w = (i == 0 || i == 200) ? 0.5 : 1.0;
    mass_rate += w * dv[i];
  }
  CHECK(std::abs(mass_rate) < 1e-10 * v.sum());
}

TEST_CASE("kernel density estimation") {
  SUBCASE("near-degenerate ensembles produce a normalized bump") {
    ParticleEnsemble ens;
    ens.positions = Mat::Zero(16, 1);
    ens.positions(1, 0) = 1e-9;
    ens.weights = Vec::Constant(16, 1.0 / 16);
    const DensityGrid g = kde_density(ens, {{-1.0, 1.0, 201}});
    CHECK(g.mass() == doctest::Approx(1.0).epsilon(1e-9));
    Index argmax = 0;
    g.values.maxCoeff(&argmax);
    CHECK(std::abs(g.point(argmax)[0]) < 0.02);
  }
  SUBCASE("standard normal samples land close to the true density") {
    CounterRng rng(101, 0);
    const int n = 10000;
    ParticleEnsemble ens;
    ens.positions = Mat(n, 1);
    for (int i = 0; i < n; ++i) ens.positions(i, 0) = rng.normal();
    ens.weights = Vec::Constant(n, 1.0 / n);
    const std::vector<GridAxis> axes = {{-6.0, 6.0, 601}};
    const DensityGrid kde = kde_density(ens, axes);
    DensityGrid exact = make_density_grid(axes);
    exact.values = gaussian_density_on(exact, GaussianBelief{Vec::Zero(1), Mat::Identity(1, 1)}).array();
    exact.normalize();
    double bc = 0.0;
    for (Index i = 0; i < kde.size(); ++i) {
      bc += kde.cell_weight(i) * std::sqrt(kde.values[i] * exact.values[i]);
    }
    CHECK(std::sqrt(std::max(0.0, 1.0 - bc)) < 0.05);
  }
  SUBCASE("the two-dimensional fast path matches the generic formula") {
    CounterRng rng(7, 7);
    ParticleEnsemble ens;
    ens.positions = Mat(40, 2);
    for (int i = 0; i < 40; ++i) {
      ens.positions(i, 0) = rng.normal();
      ens.positions(i, 1) = 0.5 * rng.normal() + 0.3 * ens.positions(i, 0);
    }
    ens.weights = Vec::Constant(40, 1.0 / 40);
    const std::vector<GridAxis> axes = {{-3.0, 3.0, 21}, {-3.0, 3.0, 21}};
    const DensityGrid g = kde_density(ens, axes);
    // recompute one interior value directly
    const Vec mean = ens.positions.transpose() * ens.weights;
    Mat cov = Mat::Zero(2, 2);
    for (Index i = 0; i < 40; ++i) {
      const Vec dxv = ens.positions.row(i).transpose() - mean;
      cov += ens.weights[i] * dxv * dxv.transpose();
    }
    const double scott = std::pow(40.0, -1.0 / 6);
    const Mat kcov = scott * scott * cov;
    const Mat prec = kcov.inverse();
    const double norm = 1.0 / (2 * M_PI * std::sqrt(kcov.determinant()));
    const Index flat = 10 * 21 + 12;
    const Vec point = g.point(flat);
    double direct = 0.0;
    for (Index i = 0; i < 40; ++i) {
      const Vec dxv = point - ens.positions.row(i).transpose();
      direct += ens.weights[i] * norm * std::exp(-0.5 * dxv.dot(prec * dxv));
    }
    // same up to the final grid normalization constant
    CHECK(g.values[flat] > 0.0);
    const double ratio = direct / g.values[flat];
    for (Index other : {static_cast<Index>(5 * 21 + 7), static_cast<Index>(15 * 21 + 3)}) {
      const Vec p2 = g.point(other);
      double d2 = 0.0;
      for (Index i = 0; i < 40; ++i) {
        const Vec dxv = p2 - ens.positions.row(i).transpose();
        d2 += ens.weights[i] * norm * std::exp(-0.5 * dxv.dot(prec * dxv));
      }
      CHECK(d2 / g.values[other] == doctest::Approx(ratio).epsilon(1e-9));
    }
  }
}

TEST_CASE("sde simulation") {
  SUBCASE("no drift and no noise freezes the state") {
    ModelSpec m = pure_diffusion_1d(0.0);
    m.dispersion = {{Polynomial(1)}};
    CounterRng rng(1, 0);
    const SdeSimulation sim = simulate_sde(m, Vec::Ones(1), 1e-2, 100, rng);
    CHECK((sim.states.array() == 1.0).all());
  }
  SUBCASE("pure-noise measurements have variance dt") {
    const ModelSpec m = pure_diffusion_1d(0.3);  // h = 0, R = I
    CounterRng rng(2024, 0);
    const int n = 100000;
    const double dt = 1e-3;
    const SdeSimulation sim = simulate_sde(m, Vec::Zero(1), dt, n, rng);
    const double var = sim.path.increments.col(0).squaredNorm() / n;
    CHECK(var == doctest::Approx(dt).epsilon(0.05));
  }
  SUBCASE("fixed seeds reproduce the path bit for bit") {
    const ModelSpec m = linear2d_raw();
    CounterRng r1(55, 0), r2(55, 0);
    const SdeSimulation a = simulate_sde(m, Vec::Ones(2), 1e-3, 50, r1);
    const SdeSimulation b = simulate_sde(m, Vec::Ones(2), 1e-3, 50, r2);
    CHECK((a.states - b.states).norm() == 0.0);
    CHECK((a.path.increments - b.path.increments).norm() == 0.0);
  }
}

TEST_CASE("particle filter tracks the kalman-bucy mean on the linear model") {
  const ModelSpec m = linear2d_raw();
  const int np = 10000;
  CounterRng rng(2025, 1);
  GaussianBelief kb{Vec::Zero(2), 0.25 * Mat::Identity(2, 2)};
  ParticleEnsemble ens;
  ens.positions = Mat(np, 2);
  for (int i = 0; i < np; ++i) ens.positions.row(i) = (0.5 * rng.normal_vec(2)).transpose();
  ens.weights = Vec::Constant(np, 1.0 / np);

  const Mat A = -Mat::Identity(2, 2), C = -Mat::Identity(2, 2);
  const Mat Q = Mat::Identity(2, 2), R = 0.01 * Mat::Identity(2, 2);
  const double dt = 1e-3;
  CounterRng sim_rng(2025, 0);
  const SdeSimulation sim = simulate_sde(m, Vec::Ones(2), dt, 300, sim_rng);
  for (int t = 0; t < 300; ++t) {
    const Vec dy = sim.path.increments.row(t).transpose();
    ens = particle_filter_step(ens, dy, dt, m, rng);
    kb = kalman_bucy_step(kb, dy, dt, A, C, Q, R);
    const Vec pf_mean = ens.positions.transpose() * ens.weights;
    for (int a = 0; a < 2; ++a) {
      CHECK(std::abs(pf_mean[a] - kb.mean[a]) < 3.0 * std::sqrt(kb.cov(a, a)));
    }
  }
}
