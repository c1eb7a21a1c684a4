#pragma once

#include "avp/lasso.hpp"
#include "avp/model.hpp"

namespace avp {

struct NoiseEstimate
{
  double sigma_hat = 0.0;
  int iterations = 0;
  bool converged = false;
};

inline constexpr int kScaledLassoMaxIterations = 50;

//! Rough noise level by alternating lasso fits and residual-scale updates,
//! stopped as soon as consecutive scale estimates differ by at most `delta`.
//! Starts from sigma = 1 with base penalty sqrt(2 n log p).
NoiseEstimate scaled_lasso_sigma(const Dataset& data, double delta, const LassoConfig& cfg = {});

} // namespace avp
