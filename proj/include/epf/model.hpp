#pragma once

#include <vector>

#include "epf/polynomial.hpp"
#include "epf/types.hpp"

namespace epf {

/// Time-invariant diffusion model
///   dx = f(x) dt + sigma(x) dW,   dy = h(x) dt + dV,
/// with W of spectral density Q and V of spectral density R (positive
/// diagonal; identity in the canonical form the filter consumes).
struct ModelSpec {
  int dim_x = 0;
  int dim_w = 0;
  int dim_y = 0;
  std::vector<Polynomial> drift;                    // f, size dim_x
  std::vector<std::vector<Polynomial>> dispersion;  // sigma, dim_x x dim_w
  Mat process_noise;                                // Q, dim_w x dim_w, SPD
  std::vector<Polynomial> observation;              // h, size dim_y
  Vec observation_noise_diag;                       // diag(R), positive

  /// Throws a structural error naming the offending field.
  void validate() const;

  bool unit_observation_noise() const;

  /// Same model with h_k scaled by r_k^{-1/2} and R = I. Measurement
  /// increments must be scaled accordingly (component k by r_k^{-1/2}).
  ModelSpec scaled_to_unit_observation_noise() const;

  /// alpha = sigma Q sigma^T as a dim_x x dim_x polynomial matrix.
  std::vector<std::vector<Polynomial>> diffusion_matrix() const;
};

/// Backward diffusion operator L[p] = sum_k f_k d_k p + 1/2 sum_kl alpha_kl d_k d_l p.
Polynomial generator_apply(const ModelSpec& model, const Polynomial& p);

}  // namespace epf
