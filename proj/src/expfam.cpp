#include "epf/expfam.hpp"

#include <cmath>
#include <limits>

#include "epf/dual2.hpp"

namespace epf {

BijectionKind bijection_kind_from_string(const std::string& name) {
  if (name == "arctanh") return BijectionKind::arctanh;
  if (name == "algebraic") return BijectionKind::algebraic;
  if (name == "tan") return BijectionKind::tan_half;
  throw structural_error("unknown bijection '" + name + "'");
}

std::string to_string(BijectionKind kind) {
  switch (kind) {
    case BijectionKind::arctanh: return "arctanh";
    case BijectionKind::algebraic: return "algebraic";
    case BijectionKind::tan_half: return "tan";
  }
  return "?";
}

double Bijection::map(double u) const {
  switch (kind) {
    case BijectionKind::arctanh: return scale * std::atanh(u);
    case BijectionKind::algebraic: return scale * u / (1.0 - u * u);
    case BijectionKind::tan_half: return scale * std::tan(0.5 * M_PI * u);
  }
  return 0.0;
}

double Bijection::log_deriv(double u) const {
  switch (kind) {
    case BijectionKind::arctanh:
      return std::log(scale) - std::log1p(-u * u);
    case BijectionKind::algebraic:
      return std::log(scale) + std::log1p(u * u) - 2.0 * std::log1p(-u * u);
    case BijectionKind::tan_half: {
      const double c = std::cos(0.5 * M_PI * u);
      return std::log(scale * 0.5 * M_PI) - 2.0 * std::log(c);
    }
  }
  return 0.0;
}

PreparedManifold prepare(const StatisticsBasis& basis, const std::vector<Bijection>& bijections,
                         const QuadratureGrid& grid) {
  basis.validate();
  if (grid.dim != basis.dim_x)
    throw structural_error("grid dimension does not match statistics dimension");
  if (static_cast<int>(bijections.size()) != grid.dim)
    throw structural_error("need one bijection per axis");
  for (const auto& b : bijections) {
    if (!(b.scale > 0.0)) throw structural_error("bijection scale must be positive");
  }

  PreparedManifold man;
  man.basis = basis;
  man.bijections = bijections;
  man.grid = grid;
  const int total = basis.total();

  std::vector<Index> keep;
  for (Index j = 0; j < grid.size(); ++j) {
    if (grid.weights[j] != 0.0) keep.push_back(j);
  }
  const Index n = static_cast<Index>(keep.size());
  man.mapped_nodes = Mat(n, grid.dim);
  man.node_stats = Mat(n, total);
  man.log_base = Vec(n);
  man.sign = Vec(n);

  for (Index r = 0; r < n; ++r) {
    const Index j = keep[static_cast<std::size_t>(r)];
    double log_jac = 0.0;
    for (int a = 0; a < grid.dim; ++a) {
      const double u = grid.nodes(j, a);
      const Bijection& b = bijections[static_cast<std::size_t>(a)];
      man.mapped_nodes(r, a) = b.map(u);
      log_jac += b.log_deriv(u);
      if (grid.provenance.chebyshev_weighted) {
        // integrand r = z w^{-1}: fold the inverse Chebyshev weight per axis
        log_jac += 0.5 * std::log1p(-u * u);
      }
    }
    man.sign[r] = grid.weights[j] > 0.0 ? 1.0 : -1.0;
    man.log_base[r] = std::log(std::abs(grid.weights[j])) + log_jac;
    for (int i = 0; i < total; ++i) {
      const MultiIndex& idx = basis.at(i);
      double v = 1.0;
      for (int a = 0; a < grid.dim; ++a) {
        for (int e = 0; e < idx[a]; ++e) v *= man.mapped_nodes(r, a);
      }
      man.node_stats(r, i) = v;
    }
    if (!std::isfinite(man.log_base[r]) || !man.node_stats.row(r).allFinite()) {
      throw structural_error("non-finite node statistic at node " + std::to_string(j) +
                             " (node too close to the cube boundary for this bijection)");
    }
  }
  return man;
}

namespace {

Vec embedded(const PreparedManifold& man, const Vec& theta) {
  if (theta.size() != man.basis.m())
    throw structural_error("theta dimension does not match the natural statistics");
  Vec full = Vec::Zero(man.basis.total());
  full.head(theta.size()) = theta;
  return full;
}

void check_finite(const MomentData& md) {
  // exp(psi) is the partition function; once it overflows the double range
  // the quadrature sum is reading a divergent integral
  constexpr double log_double_max = 709.782712893384;
  if (!std::isfinite(md.psi) || md.psi > log_double_max || !md.eta_tilde.allFinite() ||
      !md.fisher.allFinite()) {
    throw domain_error("log-partition overflow: theta outside the integrable set");
  }
}

}  // namespace

MomentData log_partition(const PreparedManifold& man, const Vec& theta) {
  const Vec full = embedded(man, theta);
  const int q = man.basis.m();
  const Index n = man.log_base.size();
  std::vector<Dual2> terms;
  terms.reserve(static_cast<std::size_t>(n));
  double shift = -std::numeric_limits<double>::infinity();
  for (Index j = 0; j < n; ++j) {
    const double value = man.log_base[j] + man.node_stats.row(j).dot(full);
    terms.push_back(Dual2::linear(value, man.node_stats.row(j).transpose(), q));
    shift = std::max(shift, value);
  }
  // signed variant of log_sum_exp: Smolyak combination weights carry signs
  Dual2 acc(0.0, man.basis.total(), q);
  for (Index j = 0; j < n; ++j) {
    acc += man.sign[j] * exp(terms[static_cast<std::size_t>(j)] - shift);
  }
  if (!(acc.value() > 0.0)) {
    throw domain_error("log-partition sum not positive: theta outside the integrable set");
  }
  const Dual2 psi = log(acc) + shift;

  MomentData md;
  md.psi = psi.value();
  md.eta_tilde = psi.grad();
  md.eta = md.eta_tilde.head(q);
  md.fisher = 0.5 * (psi.hess() + psi.hess().transpose());
  check_finite(md);
  return md;
}

MomentData log_partition_closed_form(const PreparedManifold& man, const Vec& theta) {
  const Vec full = embedded(man, theta);
  const int q = man.basis.m();
  Vec exponents = man.log_base + man.node_stats * full;
  const double shift = exponents.maxCoeff();
  const Vec soft = man.sign.array() * (exponents.array() - shift).exp();
  const double mass = soft.sum();
  if (!(mass > 0.0)) {
    throw domain_error("log-partition sum not positive: theta outside the integrable set");
  }

  MomentData md;
  md.psi = shift + std::log(mass);
  md.eta_tilde = man.node_stats.transpose() * soft / mass;
  md.eta = md.eta_tilde.head(q);
  const Mat natural = man.node_stats.leftCols(q);
  Mat second = natural.transpose() * soft.asDiagonal() * natural / mass;
  md.fisher = second - md.eta * md.eta.transpose();
  md.fisher = 0.5 * (md.fisher + md.fisher.transpose());
  check_finite(md);
  return md;
}

Vec density_at(const PreparedManifold& man, const Vec& theta, const Mat& points) {
  if (points.cols() != man.basis.dim_x)
    throw structural_error("density evaluation points have wrong dimension");
  const double psi = log_partition_closed_form(man, theta).psi;
  Vec out(points.rows());
  for (Index r = 0; r < points.rows(); ++r) {
    double dot = 0.0;
    for (int i = 0; i < man.basis.m(); ++i) {
      const MultiIndex& idx = man.basis.natural[static_cast<std::size_t>(i)];
      double v = 1.0;
      for (int a = 0; a < man.basis.dim_x; ++a) {
        for (int e = 0; e < idx[a]; ++e) v *= points(r, a);
      }
      dot += v * theta[i];
    }
    out[r] = std::exp(dot - psi);
  }
  return out;
}

Vec gaussian_to_natural(const Vec& mean, const Mat& cov, const StatisticsBasis& basis) {
  const int d = basis.dim_x;
  if (mean.size() != d || cov.rows() != d || cov.cols() != d)
    throw structural_error("gaussian_to_natural dimension mismatch");
  Eigen::LLT<Mat> llt(cov);
  if (llt.info() != Eigen::Success) throw structural_error("covariance must be positive definite");
  const Mat precision = llt.solve(Mat::Identity(d, d));
  const Vec pmu = precision * mean;

  Vec theta = Vec::Zero(basis.m());
  auto require = [&](const MultiIndex& idx, double value) {
    const int pos = basis.index_of(idx);
    if (pos < 0 || pos >= basis.m())
      throw structural_error("basis lacks monomial x^(" + idx.to_string() +
                             ") needed for a Gaussian initial density");
    theta[pos] = value;
  };
  for (int i = 0; i < d; ++i) {
    require(MultiIndex::axis(d, i, 1), pmu[i]);
    require(MultiIndex::axis(d, i, 2), -0.5 * precision(i, i));
    for (int j = i + 1; j < d; ++j) {
      require(MultiIndex::axis(d, i, 1) + MultiIndex::axis(d, j, 1), -precision(i, j));
    }
  }
  return theta;
}

}  // namespace epf
