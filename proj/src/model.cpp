#include "epf/model.hpp"

#include <cmath>

namespace epf {

void ModelSpec::validate() const {
  if (dim_x < 1) throw structural_error("model.dim_x must be >= 1");
  if (dim_w < 1) throw structural_error("model.dim_w must be >= 1");
  if (dim_y < 1) throw structural_error("model.dim_y must be >= 1");
  if (static_cast<int>(drift.size()) != dim_x) throw structural_error("model.drift must have dim_x components");
  if (static_cast<int>(dispersion.size()) != dim_x)
    throw structural_error("model.dispersion must have dim_x rows");
  for (const auto& row : dispersion) {
    if (static_cast<int>(row.size()) != dim_w)
      throw structural_error("model.dispersion must have dim_w columns");
    for (const auto& s : row) {
      if (s.dim() != dim_x) throw structural_error("model.dispersion entries must have dimension dim_x");
    }
  }
  for (const auto& f : drift) {
    if (f.dim() != dim_x) throw structural_error("model.drift entries must have dimension dim_x");
  }
  if (static_cast<int>(observation.size()) != dim_y)
    throw structural_error("model.observation must have dim_y components");
  for (const auto& h : observation) {
    if (h.dim() != dim_x) throw structural_error("model.observation entries must have dimension dim_x");
  }
  if (process_noise.rows() != dim_w || process_noise.cols() != dim_w)
    throw structural_error("model.process_spectral_density must be dim_w x dim_w");
  if (!process_noise.isApprox(process_noise.transpose(), 1e-12))
    throw structural_error("model.process_spectral_density must be symmetric");
  Eigen::LLT<Mat> llt(process_noise);
  if (llt.info() != Eigen::Success)
    throw structural_error("model.process_spectral_density must be positive definite");
  if (observation_noise_diag.size() != dim_y)
    throw structural_error("model.observation_noise must have dim_y diagonal entries");
  if ((observation_noise_diag.array() <= 0.0).any())
    throw structural_error("model.observation_noise diagonal must be positive");
}

bool ModelSpec::unit_observation_noise() const {
  return (observation_noise_diag.array() == 1.0).all();
}

ModelSpec ModelSpec::scaled_to_unit_observation_noise() const {
  ModelSpec out = *this;
  for (int k = 0; k < dim_y; ++k) {
    out.observation[static_cast<std::size_t>(k)] =
        (1.0 / std::sqrt(observation_noise_diag[k])) * observation[static_cast<std::size_t>(k)];
  }
  out.observation_noise_diag = Vec::Ones(dim_y);
  return out;
}

std::vector<std::vector<Polynomial>> ModelSpec::diffusion_matrix() const {
  std::vector<std::vector<Polynomial>> alpha(
      static_cast<std::size_t>(dim_x), std::vector<Polynomial>(static_cast<std::size_t>(dim_x), Polynomial(dim_x)));
  for (int k = 0; k < dim_x; ++k) {
    for (int l = k; l < dim_x; ++l) {
      Polynomial acc(dim_x);
      for (int a = 0; a < dim_w; ++a) {
        for (int b = 0; b < dim_w; ++b) {
          const double q = process_noise(a, b);
          if (q == 0.0) continue;
          acc = acc + q * (dispersion[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)] *
                           dispersion[static_cast<std::size_t>(l)][static_cast<std::size_t>(b)]);
        }
      }
      alpha[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = acc;
      alpha[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = acc;
    }
  }
  return alpha;
}

Polynomial generator_apply(const ModelSpec& model, const Polynomial& p) {
  if (p.dim() != model.dim_x) throw structural_error("generator argument dimension mismatch");
  Polynomial out(model.dim_x);
  for (int k = 0; k < model.dim_x; ++k) {
    out = out + model.drift[static_cast<std::size_t>(k)] * diff(p, k);
  }
  const auto alpha = model.diffusion_matrix();
  for (int k = 0; k < model.dim_x; ++k) {
    for (int l = 0; l < model.dim_x; ++l) {
      const Polynomial& a = alpha[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
      if (a.is_zero()) continue;
      out = out + 0.5 * (a * diff(diff(p, k), l));
    }
  }
  return out;
}

}  // namespace epf
