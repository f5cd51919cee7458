#pragma once

#include <cmath>
#include <vector>

#include "epf/types.hpp"

namespace epf {

/// Second-order forward-mode AD scalar: value, gradient of width p, and the
/// Hessian restricted to the leading q x q block (q <= p). The restriction
/// matches what the log-partition function needs: first derivatives in all
/// extended parameters, second derivatives only in the natural ones.
class Dual2 {
 public:
  Dual2(double value, int p, int q)
      : value_(value), grad_(Vec::Zero(p)), hess_(Mat::Zero(q, q)) {
    if (q > p || p < 0 || q < 0) throw structural_error("Dual2 requires 0 <= q <= p");
  }

  static Dual2 variable(int j, double value, int p, int q) {
    Dual2 d(value, p, q);
    if (j < 0 || j >= p) throw structural_error("Dual2 seed index out of range");
    d.grad_[j] = 1.0;
    return d;
  }

  /// Linear function value + slope^T theta, seeded directly: gradient is the
  /// slope, Hessian zero. Exact, equivalent to building it from variable()
  /// seeds term by term.
  static Dual2 linear(double value, const Vec& slope, int q) {
    Dual2 d(value, static_cast<int>(slope.size()), q);
    d.grad_ = slope;
    return d;
  }

  double value() const { return value_; }
  const Vec& grad() const { return grad_; }
  const Mat& hess() const { return hess_; }
  int width() const { return static_cast<int>(grad_.size()); }
  int hess_width() const { return static_cast<int>(hess_.rows()); }

  Dual2& operator+=(const Dual2& o) {
    check_widths(o);
    value_ += o.value_;
    grad_ += o.grad_;
    hess_ += o.hess_;
    return *this;
  }

  friend Dual2 operator+(Dual2 a, const Dual2& b) {
    a += b;
    return a;
  }

  friend Dual2 operator-(Dual2 a, const Dual2& b) {
    a.check_widths(b);
    a.value_ -= b.value_;
    a.grad_ -= b.grad_;
    a.hess_ -= b.hess_;
    return a;
  }

  friend Dual2 operator+(Dual2 a, double c) {
    a.value_ += c;
    return a;
  }
  friend Dual2 operator+(double c, Dual2 a) { return a + c; }
  friend Dual2 operator-(Dual2 a, double c) { return a + (-c); }

  friend Dual2 operator*(double c, Dual2 a) {
    a.value_ *= c;
    a.grad_ *= c;
    a.hess_ *= c;
    return a;
  }
  friend Dual2 operator*(Dual2 a, double c) { return c * a; }

  friend Dual2 operator*(const Dual2& a, const Dual2& b) {
    a.check_widths(b);
    Dual2 out(a.value_ * b.value_, a.width(), a.hess_width());
    out.grad_ = a.value_ * b.grad_ + b.value_ * a.grad_;
    const int q = a.hess_width();
    const auto ga = a.grad_.head(q);
    const auto gb = b.grad_.head(q);
    out.hess_ = a.value_ * b.hess_ + b.value_ * a.hess_;
    out.hess_.noalias() += ga * gb.transpose();
    out.hess_.noalias() += gb * ga.transpose();
    return out;
  }

  friend Dual2 exp(const Dual2& a) {
    const double e = std::exp(a.value_);
    Dual2 out(e, a.width(), a.hess_width());
    out.grad_ = e * a.grad_;
    const auto g = a.grad_.head(a.hess_width());
    out.hess_ = e * a.hess_;
    out.hess_.noalias() += e * (g * g.transpose());
    return out;
  }

  friend Dual2 log(const Dual2& a) {
    if (!(a.value_ > 0.0)) throw domain_error("log of non-positive Dual2 value");
    Dual2 out(std::log(a.value_), a.width(), a.hess_width());
    const double inv = 1.0 / a.value_;
    out.grad_ = inv * a.grad_;
    const auto g = a.grad_.head(a.hess_width());
    out.hess_ = inv * a.hess_;
    out.hess_.noalias() -= (inv * inv) * (g * g.transpose());
    return out;
  }

 private:
  void check_widths(const Dual2& o) const {
    if (width() != o.width() || hess_width() != o.hess_width())
      throw structural_error("Dual2 width mismatch");
  }

  double value_;
  Vec grad_;
  Mat hess_;
};

/// sum_i coeffs_i * terms_i
Dual2 dot(const std::vector<Dual2>& terms, const Vec& coeffs);

/// log sum_i exp(t_i), computed with the max-shift. The shift is a constant
/// under differentiation, so gradient and Hessian come out as the
/// softmax-weighted mean and centered second moment of the term derivatives.
Dual2 log_sum_exp(const std::vector<Dual2>& terms);

}  // namespace epf
