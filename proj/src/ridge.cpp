#include "avp/ridge.hpp"

#include <Eigen/Cholesky>
#include <cmath>

namespace avp {

Eigen::VectorXd
ridge_coefficients(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double gamma)
{
  if (!(gamma > 0.0)) {
    throw InvalidArgument("ridge: gamma must be positive");
  }
  if (y.size() != x.rows()) {
    throw DimensionMismatch("ridge: response length differs from row count");
  }
  const Eigen::Index n = x.rows();
  const Eigen::Index p = x.cols();
  if (p <= n) {
    Eigen::MatrixXd gram = x.transpose() * x;
    gram.diagonal().array() += gamma;
    return gram.llt().solve(x.transpose() * y);
  }
  // Push-through identity: (X^T X + g I)^{-1} X^T = X^T (X X^T + g I)^{-1}.
  Eigen::MatrixXd outer = x * x.transpose();
  outer.diagonal().array() += gamma;
  return x.transpose() * outer.llt().solve(y);
}

Eigen::VectorXd
ridge_fit(const Dataset& data, double gamma)
{
  return ridge_coefficients(data.x(), data.y(), gamma);
}

ThrrEstimate
threshold_coefficients(const Eigen::VectorXd& ridge, double lambda)
{
  if (!(lambda >= 0.0)) {
    throw InvalidArgument("thrr: lambda must be nonnegative");
  }
  ThrrEstimate out;
  out.coefficients = Eigen::VectorXd::Zero(ridge.size());
  std::vector<int> kept;
  for (Eigen::Index j = 0; j < ridge.size(); ++j) {
    if (std::abs(ridge(j)) > lambda) {
      out.coefficients(j) = ridge(j);
      kept.push_back(static_cast<int>(j));
    }
  }
  out.support = Support(std::move(kept));
  return out;
}

ThrrEstimate
thrr_estimate(const Dataset& data, const ThrrParams& params)
{
  return threshold_coefficients(ridge_fit(data, params.gamma), params.lambda);
}

} // namespace avp
