#pragma once

#include <utility>
#include <vector>

#include "epf/model.hpp"
#include "epf/multi_index.hpp"
#include "epf/types.hpp"

namespace epf {

/// Natural statistics c (user-ordered monomials, no constant) plus the
/// extension c_h: the remaining monomials, up to the highest total degree the
/// filter expansion produces, in graded-lex order. The concatenation is
/// written c_tilde.
struct StatisticsBasis {
  int dim_x = 0;
  std::vector<MultiIndex> natural;
  std::vector<MultiIndex> extension;

  int m() const { return static_cast<int>(natural.size()); }
  int mh() const { return static_cast<int>(extension.size()); }
  int total() const { return m() + mh(); }

  /// Position in c_tilde, or -1.
  int index_of(const MultiIndex& idx) const;
  const MultiIndex& at(int i) const;

  void validate() const;
};

/// Constant matrices of the parameter SDE
///   d theta = g^{-1} [a0 + b0 eta + (A0 + eta bh^T) eta_tilde] dt + lambda dy,
/// assembled symbolically from L[c_i] - 1/2 |h|^2 c_i = a0_i + A0_i. c_tilde
/// and 1/2 |h|^2 = b0 + bh^T c_tilde, with h_k = lambda0_k + lambda_k^T c.
struct CoefficientSet {
  Vec a0;       // m
  Mat A0;       // m x (m + mh)
  double b0 = 0.0;
  Vec bh;       // m + mh
  Mat lambda;   // m x dim_y
  Vec lambda0;  // dim_y
};

/// Requires unit observation noise (scale the model first). Throws a domain
/// error naming the offending monomial if some h_k is not in span{1, c}.
std::pair<StatisticsBasis, CoefficientSet> assemble_coefficients(
    const ModelSpec& model, const std::vector<MultiIndex>& natural);

}  // namespace epf
