#pragma once

#include <map>
#include <string>

#include "epf/multi_index.hpp"
#include "epf/types.hpp"

namespace epf {

/// Sparse multivariate polynomial with real coefficients, stored as a map
/// from multi-index to coefficient in graded-lex order. Canonical form: no
/// stored coefficient is exactly zero.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, double>;

  explicit Polynomial(int dim) : dim_(dim) {
    if (dim < 1) throw structural_error("polynomial dimension must be >= 1");
  }
  static Polynomial constant(int dim, double value);
  static Polynomial monomial(const MultiIndex& index, double coeff = 1.0);

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // 0 for the zero polynomial

  /// Adds coeff * x^index, merging like terms and dropping exact zeros.
  void add_term(const MultiIndex& index, double coeff);
  double coefficient(const MultiIndex& index) const;
  double constant_term() const;

  template <typename Derived>
  typename Derived::Scalar eval(const Eigen::MatrixBase<Derived>& x) const {
    using Scalar = typename Derived::Scalar;
    if (x.size() != dim_) throw structural_error("evaluation point dimension mismatch");
    Scalar acc(0);
    for (const auto& [idx, coeff] : terms_) {
      Scalar term(coeff);
      for (int k = 0; k < dim_; ++k) {
        for (int e = 0; e < idx[k]; ++e) term *= x[k];
      }
      acc += term;
    }
    return acc;
  }

  /// One term per separator: "coeff@e1,e2,...,ed". Separator is ';' or
  /// newline; "0" denotes the zero polynomial.
  std::string to_string() const;
  static Polynomial parse(const std::string& text, int dim);

 private:
  int dim_;
  TermMap terms_;
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator*(double a, const Polynomial& p);

/// Formal partial derivative along the given axis.
Polynomial diff(const Polynomial& p, int axis);

}  // namespace epf
