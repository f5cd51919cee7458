#include "epf/dual2.hpp"

#include <algorithm>

namespace epf {

Dual2 dot(const std::vector<Dual2>& terms, const Vec& coeffs) {
  if (terms.empty()) throw domain_error("dot of empty Dual2 vector");
  if (static_cast<Index>(terms.size()) != coeffs.size())
    throw structural_error("dot size mismatch");
  Dual2 acc(0.0, terms.front().width(), terms.front().hess_width());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    acc += coeffs[static_cast<Index>(i)] * terms[i];
  }
  return acc;
}

Dual2 log_sum_exp(const std::vector<Dual2>& terms) {
  if (terms.empty()) throw domain_error("log_sum_exp of empty input");
  double shift = terms.front().value();
  for (const Dual2& t : terms) shift = std::max(shift, t.value());
  Dual2 acc(0.0, terms.front().width(), terms.front().hess_width());
  for (const Dual2& t : terms) acc += exp(t - shift);
  return log(acc) + shift;
}

}  // namespace epf
