#include <doctest.h>

#include <cmath>

#include "epf/expfam.hpp"
#include "epf/rng.hpp"

using namespace epf;

namespace {

MultiIndex mi(std::vector<int> e) { return MultiIndex(std::move(e)); }

StatisticsBasis basis_1d(int max_natural, int max_extension) {
  StatisticsBasis b;
  b.dim_x = 1;
  for (int k = 1; k <= max_natural; ++k) b.natural.push_back(mi({k}));
  for (int k = max_natural + 1; k <= max_extension; ++k) b.extension.push_back(mi({k}));
  return b;
}

PreparedManifold gaussian_manifold(int max_natural, int max_extension, double scale = 4.0,
                                   int level = 6, BijectionKind kind = BijectionKind::arctanh) {
  return prepare(basis_1d(max_natural, max_extension),
                 {Bijection{kind, scale}}, gauss_patterson(level));
}

// moments of N(mu, var) for powers 1..8
Vec gaussian_moments(double mu, double var, int pmax) {
  const double z[9] = {1, 0, 1, 0, 3, 0, 15, 0, 105};
  Vec out(pmax);
  for (int p = 1; p <= pmax; ++p) {
    double acc = 0.0;
    double binom = 1.0;
    for (int k = 0; k <= p; ++k) {
      acc += binom * std::pow(mu, p - k) * std::pow(std::sqrt(var), k) * z[k];
      binom = binom * (p - k) / (k + 1);
    }
    out[p - 1] = acc;
  }
  return out;
}

}  // namespace

TEST_CASE("prepare computes mapped statistics and the log base") {
  StatisticsBasis b = basis_1d(1, 0);
  const QuadratureGrid grid = gauss_chebyshev(2);
  const PreparedManifold man = prepare(b, {Bijection{BijectionKind::arctanh, 1.0}}, grid);
  REQUIRE(man.node_stats.rows() == 2);
  CHECK(man.node_stats(0, 0) == doctest::Approx(-0.88137358701954303).epsilon(1e-10));
  CHECK(man.node_stats(1, 0) == doctest::Approx(+0.88137358701954303).epsilon(1e-10));
  CHECK(man.node_stats.cols() == 1);  // empty extension

  // chebyshev de-weighting folded with the arctanh jacobian:
  // log(pi/2) + log phi' + 1/2 log(1-u^2) = log(pi/2) - 1/2 log(1-u^2)
  for (int j = 0; j < 2; ++j) {
    const double u = grid.nodes(j, 0);
    const double expected = std::log(M_PI / 2) - 0.5 * std::log1p(-u * u);
    CHECK(man.log_base[j] == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("prepare rejects overflowing bijections") {
  StatisticsBasis b = basis_1d(8, 0);
  // tan bijection with a huge scale: x^8 at the outermost level-9 node overflows
  CHECK_THROWS_AS(prepare(b, {Bijection{BijectionKind::tan_half, 1e40}}, gauss_patterson(9)), Error);
}

TEST_CASE("standard normal moments and fisher matrix") {
  const PreparedManifold man = gaussian_manifold(2, 0);
  Vec theta(2);
  theta << 0.0, -0.5;
  const MomentData md = log_partition(man, theta);
  CHECK(md.psi == doctest::Approx(0.91893853320467274).epsilon(1e-8));
  CHECK(md.eta[0] == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(std::abs(md.eta[0]) < 1e-8);
  CHECK(md.eta[1] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(md.fisher(0, 0) == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(std::abs(md.fisher(0, 1)) < 1e-7);
  CHECK(md.fisher(1, 1) == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("extension moments via the embedded gradient") {
  const PreparedManifold man = gaussian_manifold(2, 4);
  Vec theta(2);
  theta << 0.0, -0.5;
  const MomentData md = log_partition(man, theta);
  REQUIRE(md.eta_tilde.size() == 4);
  CHECK(std::abs(md.eta_tilde[2]) < 1e-7);                                  // E x^3
  CHECK(md.eta_tilde[3] == doctest::Approx(3.0).epsilon(1e-7));             // E x^4
  CHECK((md.eta - md.eta_tilde.head(2)).norm() == 0.0);
}

TEST_CASE("positive leading even coefficient is rejected") {
  const PreparedManifold man = gaussian_manifold(2, 0, 1.0, 6, BijectionKind::algebraic);
  Vec theta(2);
  theta << 0.0, +1.0;
  CHECK_THROWS_AS(log_partition(man, theta), Error);
}

TEST_CASE("density evaluation") {
  const PreparedManifold man = gaussian_manifold(2, 0);
  Vec theta(2);
  theta << 0.0, -0.5;

  Mat points(1, 1);
  points(0, 0) = 0.0;
  CHECK(density_at(man, theta, points)[0] == doctest::Approx(0.39894228040143268).epsilon(1e-7));

  SUBCASE("density ratios drop the log-partition") {
    Mat ab(2, 1);
    ab << 0.3, -1.1;
    const Vec d = density_at(man, theta, ab);
    const double expected = std::exp((0.3 * theta[0] + 0.09 * theta[1]) -
                                     (-1.1 * theta[0] + 1.21 * theta[1]));
    CHECK(d[0] / d[1] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("bimodal initial density of the unidimensional experiment") {
  const PreparedManifold man = gaussian_manifold(4, 0, 1.0, 6);
  Vec theta(4);
  theta << 0.0, 1.0, 0.0, -1.0;
  // d/dx log p = 2x - 4x^3 vanishes at 0 and +-sqrt(1/2)
  const double peak = std::sqrt(0.5);
  Mat points(4, 1);
  points << 0.0, peak, -peak, peak + 0.05;
  const Vec d = density_at(man, theta, points);
  CHECK(d[1] > d[0]);
  CHECK(d[2] == doctest::Approx(d[1]).epsilon(1e-12));
  CHECK(d[1] > d[3]);
}

TEST_CASE("gaussian parameters to natural coordinates") {
  SUBCASE("standard normal on the quartic basis") {
    const Vec theta = gaussian_to_natural(Vec::Zero(1), Mat::Identity(1, 1), basis_1d(4, 0));
    CHECK(theta[0] == 0.0);
    CHECK(theta[1] == doctest::Approx(-0.5));
    CHECK(theta[2] == 0.0);
    CHECK(theta[3] == 0.0);
  }
  SUBCASE("N(1,4)") {
    const Vec theta = gaussian_to_natural(Vec::Ones(1), 4.0 * Mat::Identity(1, 1), basis_1d(4, 0));
    CHECK(theta[0] == doctest::Approx(0.25));
    CHECK(theta[1] == doctest::Approx(-0.125));
  }
  SUBCASE("two-dimensional isotropic") {
    StatisticsBasis b;
    b.dim_x = 2;
    b.natural = {mi({0, 1}), mi({0, 2}), mi({1, 0}), mi({1, 1}), mi({2, 0})};
    const double s2 = 0.25;
    const Vec theta = gaussian_to_natural(Vec::Zero(2), s2 * Mat::Identity(2, 2), b);
    CHECK(theta[1] == doctest::Approx(-1.0 / (2 * s2)));
    CHECK(theta[4] == doctest::Approx(-1.0 / (2 * s2)));
    CHECK(theta[3] == 0.0);
  }
  SUBCASE("missing quadratic monomial") {
    StatisticsBasis b;
    b.dim_x = 2;
    b.natural = {mi({0, 1}), mi({1, 0}), mi({1, 1})};
    CHECK_THROWS_AS(gaussian_to_natural(Vec::Zero(2), Mat::Identity(2, 2), b), Error);
  }
}

TEST_CASE("fisher matrix equals the covariance of the natural statistics") {
  // g_ij = eta_{i+j} - eta_i eta_j for monomial bases (extension up to x^8)
  const PreparedManifold man = gaussian_manifold(4, 8, 4.0, 7);
  CounterRng rng(13, 0);
  for (int trial = 0; trial < 20; ++trial) {
    Vec theta(4);
    theta << 0.6 * (rng.uniform() - 0.5), -0.2 - 0.4 * rng.uniform(),
        0.1 * (rng.uniform() - 0.5), -0.05 - 0.1 * rng.uniform();
    const MomentData md = log_partition(man, theta);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const int pos = man.basis.index_of(mi({i + j + 2}));
        REQUIRE(pos >= 0);
        const double expected = md.eta_tilde[pos] - md.eta[i] * md.eta[j];
        CHECK(std::abs(md.fisher(i, j) - expected) < 1e-10 * std::max(1.0, std::abs(expected)));
      }
    }
  }
}

TEST_CASE("embedded-gradient extension moments equal direct weighted node sums") {
  const PreparedManifold man = gaussian_manifold(2, 6, 3.0, 6);
  Vec theta(2);
  theta << 0.2, -0.4;
  const MomentData md = log_partition(man, theta);

  // independent route: softmax over the raw node data
  Vec expo = man.log_base + man.node_stats.leftCols(2) * theta;
  const double shift = expo.maxCoeff();
  const Vec w = man.sign.array() * (expo.array() - shift).exp();
  for (int s = 2; s < man.basis.total(); ++s) {
    const double direct = man.node_stats.col(s).dot(w) / w.sum();
    CHECK(std::abs(md.eta_tilde[s] - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("automatic differentiation agrees with the closed-form softmax") {
  const PreparedManifold man = gaussian_manifold(4, 8, 4.0, 6);
  CounterRng rng(17, 0);
  for (int trial = 0; trial < 10; ++trial) {
    Vec theta(4);
    theta << rng.uniform() - 0.5, -0.3 - 0.4 * rng.uniform(), 0.1 * (rng.uniform() - 0.5),
        -0.02 - 0.1 * rng.uniform();
    const MomentData ad = log_partition(man, theta);
    const MomentData cf = log_partition_closed_form(man, theta);
    CHECK(std::abs(ad.psi - cf.psi) < 1e-12 * std::max(1.0, std::abs(cf.psi)));
    CHECK((ad.eta_tilde - cf.eta_tilde).lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK((ad.fisher - cf.fisher).lpNorm<Eigen::Infinity>() < 1e-12);
  }
}

TEST_CASE("fisher matrix is positive semidefinite at accepted parameters") {
  const PreparedManifold man = gaussian_manifold(4, 0, 2.0, 6);
  CounterRng rng(19, 0);
  for (int trial = 0; trial < 10; ++trial) {
    Vec theta(4);
    theta << rng.uniform() - 0.5, -0.2 - rng.uniform(), 0.2 * (rng.uniform() - 0.5),
        -0.05 - 0.2 * rng.uniform();
    const MomentData md = log_partition(man, theta);
    Eigen::SelfAdjointEigenSolver<Mat> es(md.fisher, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() > -1e-10);
  }
}

TEST_CASE("log-partition error shrinks as nodes are added") {
  Vec theta(2);
  theta << 0.1, -0.5;
  double last = 1e300;
  for (int n : {8, 16, 32, 64}) {
    const PreparedManifold coarse = prepare(basis_1d(2, 0), {Bijection{BijectionKind::arctanh, 2.0}},
                                            gauss_chebyshev(n));
    const PreparedManifold fine = prepare(basis_1d(2, 0), {Bijection{BijectionKind::arctanh, 2.0}},
                                          gauss_chebyshev(2 * n));
    const double gap = std::abs(log_partition(coarse, theta).psi - log_partition(fine, theta).psi);
    CHECK(gap < last + 1e-14);
    last = gap;
  }
  CHECK(last < 1e-10);
}

TEST_CASE("algebraic and tan bijections converge for the gaussian family") {
  Vec theta(2);
  theta << 0.25, -0.5;
  const Vec exact = gaussian_moments(0.25, 1.0, 2);
  for (BijectionKind kind : {BijectionKind::algebraic, BijectionKind::tan_half}) {
    double err5 = 0.0, err7 = 0.0;
    for (int level : {5, 7}) {
      const PreparedManifold man = gaussian_manifold(2, 0, 1.0, level, kind);
      const MomentData md = log_partition(man, theta);
      const double err = (md.eta - exact).lpNorm<Eigen::Infinity>();
      (level == 5 ? err5 : err7) = err;
    }
    CHECK(err7 < err5);
    CHECK(err7 < 1e-6);
  }
}
