#include "epf/basis.hpp"

#include <algorithm>
#include <set>

namespace epf {

int StatisticsBasis::index_of(const MultiIndex& idx) const {
  for (int i = 0; i < m(); ++i) {
    if (natural[static_cast<std::size_t>(i)] == idx) return i;
  }
  for (int i = 0; i < mh(); ++i) {
    if (extension[static_cast<std::size_t>(i)] == idx) return m() + i;
  }
  return -1;
}

const MultiIndex& StatisticsBasis::at(int i) const {
  if (i < m()) return natural[static_cast<std::size_t>(i)];
  return extension[static_cast<std::size_t>(i - m())];
}

void StatisticsBasis::validate() const {
  if (dim_x < 1) throw structural_error("statistics basis dimension must be >= 1");
  if (natural.empty()) throw structural_error("statistics basis must have at least one natural statistic");
  std::set<MultiIndex> seen;
  for (const auto& idx : natural) {
    if (idx.dim() != dim_x) throw structural_error("natural statistic dimension mismatch");
    if (idx.is_zero()) throw structural_error("the constant monomial is not a valid natural statistic");
    if (!seen.insert(idx).second)
      throw structural_error("duplicate statistic x^(" + idx.to_string() + ")");
  }
  for (const auto& idx : extension) {
    if (idx.dim() != dim_x) throw structural_error("extension statistic dimension mismatch");
    if (idx.is_zero()) throw structural_error("the constant monomial is not a valid extension statistic");
    if (!seen.insert(idx).second)
      throw structural_error("duplicate statistic x^(" + idx.to_string() + ") across natural/extension");
  }
}

std::pair<StatisticsBasis, CoefficientSet> assemble_coefficients(
    const ModelSpec& model, const std::vector<MultiIndex>& natural) {
  model.validate();
  if (!model.unit_observation_noise())
    throw structural_error("assemble_coefficients requires unit observation noise; scale the model first");

  StatisticsBasis basis;
  basis.dim_x = model.dim_x;
  basis.natural = natural;
  basis.validate();
  const int m = basis.m();
  const int dy = model.dim_y;

  // lambda: expand each h_k over {1, c}; anything else breaks the affine-span requirement.
  CoefficientSet coeffs;
  coeffs.lambda = Mat::Zero(m, dy);
  coeffs.lambda0 = Vec::Zero(dy);
  for (int k = 0; k < dy; ++k) {
    for (const auto& [idx, c] : model.observation[static_cast<std::size_t>(k)].terms()) {
      if (idx.is_zero()) {
        coeffs.lambda0[k] = c;
        continue;
      }
      const int pos = basis.index_of(idx);
      if (pos < 0 || pos >= m) {
        throw domain_error("observation component " + std::to_string(k + 1) + " contains monomial x^(" +
                           idx.to_string() + ") outside span{1, c}: the observation drift must be affine in the natural statistics");
      }
      coeffs.lambda(pos, k) = c;
    }
  }

  // 1/2 |h|^2 and the drift expansion polynomials L[c_i] - 1/2|h|^2 c_i.
  Polynomial half_h2(model.dim_x);
  for (int k = 0; k < dy; ++k) {
    const Polynomial& h = model.observation[static_cast<std::size_t>(k)];
    half_h2 = half_h2 + 0.5 * (h * h);
  }
  std::vector<Polynomial> expansion;
  expansion.reserve(static_cast<std::size_t>(m));
  int max_degree = half_h2.degree();
  for (int i = 0; i < m; ++i) {
    const Polynomial ci = Polynomial::monomial(basis.natural[static_cast<std::size_t>(i)]);
    Polynomial pi = generator_apply(model, ci) - half_h2 * ci;
    max_degree = std::max(max_degree, pi.degree());
    expansion.push_back(std::move(pi));
  }

  // Extension: every monomial of degree 1..max_degree not already natural.
  std::set<MultiIndex> natural_set(natural.begin(), natural.end());
  for (const auto& idx : enumerate_degrees(model.dim_x, 1, max_degree)) {
    if (!natural_set.count(idx)) basis.extension.push_back(idx);
  }
  basis.validate();
  const int total = basis.total();

  coeffs.a0 = Vec::Zero(m);
  coeffs.A0 = Mat::Zero(m, total);
  coeffs.bh = Vec::Zero(total);
  for (int i = 0; i < m; ++i) {
    for (const auto& [idx, c] : expansion[static_cast<std::size_t>(i)].terms()) {
      if (idx.is_zero()) {
        coeffs.a0[i] = c;
        continue;
      }
      const int pos = basis.index_of(idx);
      if (pos < 0) throw structural_error("internal: expansion monomial missing from basis");
      coeffs.A0(i, pos) = c;
    }
  }
  for (const auto& [idx, c] : half_h2.terms()) {
    if (idx.is_zero()) {
      coeffs.b0 = c;
      continue;
    }
    const int pos = basis.index_of(idx);
    if (pos < 0) throw structural_error("internal: |h|^2 monomial missing from basis");
    coeffs.bh[pos] = c;
  }
  return {std::move(basis), std::move(coeffs)};
}

}  // namespace epf
