#include <doctest.h>

#include <cmath>

#include "epf/expfam.hpp"
#include "epf/metrics.hpp"
#include "epf/quadrature.hpp"

using namespace epf;

namespace {

DensityGrid gaussian_grid(const std::vector<GridAxis>& axes, double mean, double var) {
  DensityGrid g = make_density_grid(axes);
  g.values = gaussian_density_on(g, GaussianBelief{Vec::Constant(1, mean), var * Mat::Identity(1, 1)}).array();
  g.normalize();
  return g;
}

}  // namespace

TEST_CASE("hellinger distance basics") {
  const std::vector<GridAxis> axes = {{-9.0, 10.0, 2000}};
  const DensityGrid p = gaussian_grid(axes, 0.0, 1.0);
  const DensityGrid q = gaussian_grid(axes, 1.0, 1.0);

  SUBCASE("identical densities have distance zero") {
    CHECK(hellinger(p, p) == 0.0);
  }
  SUBCASE("disjoint supports have distance one") {
    DensityGrid a = make_density_grid(axes);
    DensityGrid b = make_density_grid(axes);
    a.values[100] = 1.0;
    b.values[1500] = 1.0;
    a.normalize();
    b.normalize();
    CHECK(hellinger(a, b) == doctest::Approx(1.0));
  }
  SUBCASE("unit-variance gaussians one mean apart") {
    // closed form: H = sqrt(1 - exp(-1/8))
    const double expected = std::sqrt(1.0 - std::exp(-0.125));
    CHECK(hellinger(p, q) == doctest::Approx(expected).epsilon(1e-6));
    CHECK(expected == doctest::Approx(0.342787).epsilon(1e-5));
  }
  SUBCASE("symmetry and the triangle inequality") {
    const DensityGrid r = gaussian_grid(axes, 0.5, 1.44);
    CHECK(hellinger(p, q) == hellinger(q, p));
    CHECK(hellinger(p, q) <= hellinger(p, r) + hellinger(r, q) + 1e-12);
  }
  SUBCASE("stable under simultaneous grid refinement") {
    const std::vector<GridAxis> fine = {{-9.0, 10.0, 4000}};
    const double h_coarse = hellinger(p, q);
    const double h_fine = hellinger(gaussian_grid(fine, 0.0, 1.0), gaussian_grid(fine, 1.0, 1.0));
    CHECK(std::abs(h_coarse - h_fine) < 1e-4);
  }
  SUBCASE("axis mismatch is a structural error") {
    const DensityGrid other = gaussian_grid({{-8.0, 8.0, 2000}}, 0.0, 1.0);
    CHECK_THROWS_AS(hellinger(p, other), Error);
  }
}

TEST_CASE("moment traces") {
  const std::vector<double> times = {0.0, 0.1, 0.2};
  const std::vector<double> a = {1.0, 2.0, 3.0};
  const std::vector<double> b = {1.0, 1.5, 3.5};

  SUBCASE("identical sources give all zeros") {
    const ComparisonTrace t = moment_trace(times, a, times, a, "x", "x");
    for (double v : t.values) CHECK(v == 0.0);
  }
  SUBCASE("absolute differences") {
    const ComparisonTrace t = moment_trace(times, a, times, b, "x", "y");
    CHECK(t.values[1] == doctest::Approx(0.5));
    CHECK(t.values[2] == doctest::Approx(0.5));
  }
  SUBCASE("mismatched time grids are a capability error") {
    const std::vector<double> other = {0.0, 0.15, 0.3};
    CHECK_THROWS_AS(moment_trace(times, a, other, b, "x", "y"), Error);
    CHECK_THROWS_AS(moment_trace(times, a, {0.0, 0.1}, {1.0, 2.0}, "x", "y"), Error);
  }
}

TEST_CASE("projection moments agree with the rasterized density") {
  // self-consistency: eta from the manifold vs the trapezoid moment of the
  // same density evaluated on a wide grid
  StatisticsBasis basis;
  basis.dim_x = 1;
  basis.natural = {MultiIndex({1}), MultiIndex({2})};
  const PreparedManifold man =
      prepare(basis, {Bijection{BijectionKind::arctanh, 3.0}}, gauss_patterson(7));
  Vec theta(2);
  theta << 0.4, -0.6;
  const MomentData md = log_partition(man, theta);

  const std::vector<GridAxis> axes = {{-9.0, 9.0, 3001}};
  DensityGrid grid = make_density_grid(axes);
  Mat pts(grid.size(), 1);
  for (Index i = 0; i < grid.size(); ++i) pts(i, 0) = grid.point(i)[0];
  grid.values = density_at(man, theta, pts).array();
  grid.normalize();

  CHECK(std::abs(grid.expectation(MultiIndex({1})) - md.eta[0]) < 1e-6);
  CHECK(std::abs(grid.expectation(MultiIndex({2})) - md.eta[1]) < 1e-6);
}
