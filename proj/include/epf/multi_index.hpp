#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "epf/types.hpp"

namespace epf {

/// Exponent vector of a monomial x^i = x_1^{i_1} ... x_d^{i_d}.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> exponents);
  static MultiIndex zero(int dim);
  static MultiIndex axis(int dim, int axis, int power = 1);

  int dim() const { return static_cast<int>(exps_.size()); }
  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  bool is_zero() const { return degree() == 0; }

  MultiIndex operator+(const MultiIndex& other) const;
  /// Lowers the exponent on one axis (formal differentiation support);
  /// requires a positive exponent there.
  MultiIndex lowered(int axis) const;

  bool operator==(const MultiIndex& other) const { return exps_ == other.exps_; }
  bool operator!=(const MultiIndex& other) const { return !(*this == other); }

  /// "e1,e2,...,ed"
  std::string to_string() const;
  static MultiIndex parse(const std::string& text);

  const std::vector<int>& exponents() const { return exps_; }

 private:
  std::vector<int> exps_;
};

/// Graded lexicographic order: total degree first, then exponents compared
/// left to right. This is the canonical ordering for every matrix layout in
/// the library, so golden outputs are stable.
bool operator<(const MultiIndex& a, const MultiIndex& b);

/// All multi-indices of the given dimension with total degree in
/// [min_degree, max_degree], in graded-lex order.
std::vector<MultiIndex> enumerate_degrees(int dim, int min_degree, int max_degree);

}  // namespace epf
