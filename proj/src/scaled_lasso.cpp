#include "avp/scaled_lasso.hpp"

#include <cmath>

namespace avp {

NoiseEstimate
scaled_lasso_sigma(const Dataset& data, double delta, const LassoConfig& cfg)
{
  if (!(delta > 0.0)) {
    throw InvalidArgument("scaled lasso: delta must be positive");
  }
  if (data.p() < 2) {
    throw InvalidArgument("scaled lasso: needs p >= 2");
  }
  const double n = static_cast<double>(data.n());
  const double lambda0 = std::sqrt(2.0 * n * std::log(static_cast<double>(data.p())));

  LassoSolver solver(data.x(), data.y(), cfg);
  NoiseEstimate est;
  est.sigma_hat = 1.0;
  while (est.iterations < kScaledLassoMaxIterations) {
    const double previous = est.sigma_hat;
    // A capped lasso still yields a usable residual for this rough estimate.
    const LassoResult fit = solver.solve(est.sigma_hat * lambda0);
    est.sigma_hat = (data.y() - data.x() * fit.beta).norm() / std::sqrt(n);
    ++est.iterations;
    if (std::abs(est.sigma_hat - previous) <= delta) {
      est.converged = true;
      break;
    }
  }
  return est;
}

} // namespace avp
