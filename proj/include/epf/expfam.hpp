#pragma once

#include <string>
#include <vector>

#include "epf/basis.hpp"
#include "epf/quadrature.hpp"
#include "epf/types.hpp"

namespace epf {

enum class BijectionKind { arctanh, algebraic, tan_half };

BijectionKind bijection_kind_from_string(const std::string& name);
std::string to_string(BijectionKind kind);

/// Smooth increasing bijection from (-1,1) onto the real line, per axis.
///   arctanh:   phi = s atanh(u),      phi' = s / (1-u^2)
///   algebraic: phi = s u / (1-u^2),   phi' = s (1+u^2) / (1-u^2)^2
///   tan:       phi = s tan(pi u / 2), phi' = s pi / (2 cos^2(pi u / 2))
struct Bijection {
  BijectionKind kind = BijectionKind::arctanh;
  double scale = 1.0;

  double map(double u) const;
  double log_deriv(double u) const;
};

/// Quadrature grid transported to state space: per-node extended statistics
/// c_tilde(phi(u_j)) and the log of the base factor
///   log |w_j| + sum_axis log phi'(u_{j,axis})  [+ the Chebyshev de-weighting
///   1/2 log(1-u^2) per axis for Gauss-Chebyshev grids].
/// Smolyak combination weights can be negative, so the weight sign is kept
/// separately. Everything the log-partition function needs per step is
/// precomputed here; zero-weight nodes are dropped.
struct PreparedManifold {
  StatisticsBasis basis;
  std::vector<Bijection> bijections;  // one per axis
  QuadratureGrid grid;
  Mat mapped_nodes;  // N x dim_x, states phi(u_j)
  Mat node_stats;    // N x (m + mh), natural columns first
  Vec log_base;      // N
  Vec sign;          // N, +-1
};

PreparedManifold prepare(const StatisticsBasis& basis, const std::vector<Bijection>& bijections,
                         const QuadratureGrid& grid);

/// psi with its first two derivatives at the embedded point [theta; 0].
struct MomentData {
  double psi = 0.0;
  Vec eta;        // m
  Vec eta_tilde;  // m + mh; leading m entries equal eta
  Mat fisher;     // m x m, symmetric PSD
};

/// Quadrature approximation of the log-partition function with moments
/// eta_tilde = grad psi and Fisher g = hess psi extracted by forward-mode AD.
/// Throws a domain error when psi or any derivative is non-finite (theta
/// outside the integrable set as seen by this grid).
MomentData log_partition(const PreparedManifold& man, const Vec& theta);

/// Same quantities from the explicit softmax identities (the weighted mean
/// and centered second moment of the node statistics). Independent code path
/// kept as an oracle for the AD route; the two must agree to ~1e-12.
MomentData log_partition_closed_form(const PreparedManifold& man, const Vec& theta);

/// p_theta(x) = exp(c(x)^T theta - psi) at each row of `points`.
Vec density_at(const PreparedManifold& man, const Vec& theta, const Mat& points);

/// Natural parameters of N(mean, cov) on a basis containing all first- and
/// second-order monomials: coefficient of x_i is (P mu)_i, of x_i^2 is
/// -P_ii/2, of x_i x_j (i<j) is -P_ij, with P = cov^{-1}; all other entries 0.
Vec gaussian_to_natural(const Vec& mean, const Mat& cov, const StatisticsBasis& basis);

}  // namespace epf
