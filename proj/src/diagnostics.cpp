#include "avp/diagnostics.hpp"

#include "avp/ridge.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace avp {

namespace {

LassoConfig
tight_config()
{
  LassoConfig cfg;
  cfg.tol = 1e-12;
  cfg.max_iter = 200000;
  return cfg;
}

// True when some coordinate is close to switching in or out of the support.
bool
lasso_near_boundary(const Eigen::MatrixXd& x,
                    const Eigen::VectorXd& y,
                    const Eigen::VectorXd& beta,
                    double lambda,
                    const LassoConfig& cfg)
{
  const Eigen::VectorXd corr = x.transpose() * (y - x * beta);
  const double scale = std::max(1.0, beta.cwiseAbs().maxCoeff());
  for (Eigen::Index j = 0; j < beta.size(); ++j) {
    const double mag = std::abs(beta(j));
    if (mag > cfg.support_zero_tol) {
      if (mag <= kBoundaryMargin * scale) {
        return true;
      }
    } else if (std::abs(corr(j)) >= (1.0 - kBoundaryMargin) * lambda) {
      return true;
    }
  }
  return false;
}

} // namespace

SymmetryCheck
lasso_scale_symmetry(const Dataset& data, double lambda)
{
  if (!(lambda > 0.0)) {
    throw InvalidArgument("scale symmetry: lambda must be positive");
  }
  const LassoConfig cfg = tight_config();
  const Eigen::VectorXd y_scaled = data.y() / lambda;

  LassoSolver original(data.x(), data.y(), cfg);
  LassoSolver rescaled(data.x(), y_scaled, cfg);
  const Eigen::VectorXd b_orig = original.solve(lambda).beta;
  const Eigen::VectorXd b_resc = rescaled.solve(1.0).beta;

  SymmetryCheck out;
  out.original = lasso_support(b_orig, cfg);
  out.rescaled = lasso_support(b_resc, cfg);
  out.boundary = lasso_near_boundary(data.x(), data.y(), b_orig, lambda, cfg) ||
                 lasso_near_boundary(data.x(), y_scaled, b_resc, 1.0, cfg);
  out.equal = out.original == out.rescaled;
  return out;
}

SymmetryCheck
thrr_scale_symmetry(const Dataset& data, double gamma, double lambda)
{
  if (!(lambda > 0.0)) {
    throw InvalidArgument("scale symmetry: lambda must be positive");
  }
  const Eigen::VectorXd ridge = ridge_coefficients(data.x(), data.y(), gamma);
  const Eigen::VectorXd ridge_scaled = ridge_coefficients(data.x(), data.y() / lambda, gamma);

  SymmetryCheck out;
  out.original = threshold_coefficients(ridge, lambda).support;
  out.rescaled = threshold_coefficients(ridge_scaled, 1.0).support;
  for (Eigen::Index j = 0; j < ridge.size(); ++j) {
    if (std::abs(std::abs(ridge(j)) - lambda) <= kBoundaryMargin * lambda) {
      out.boundary = true;
    }
  }
  out.equal = out.original == out.rescaled;
  return out;
}

ConstrainedKkt
check_constrained_optimality(const Eigen::MatrixXd& x,
                             const Eigen::VectorXd& y,
                             const Eigen::VectorXd& beta,
                             double tol)
{
  ConstrainedKkt out;
  out.radius = beta.lpNorm<1>();
  if (out.radius == 0.0) {
    // Only feasible point.
    out.pass = true;
    return out;
  }
  const Eigen::VectorXd resid = y - x * beta;
  const Eigen::VectorXd corr = x.transpose() * resid;

  double sum = 0.0;
  int active = 0;
  for (Eigen::Index j = 0; j < beta.size(); ++j) {
    if (beta(j) != 0.0) {
      sum += std::abs(corr(j));
      ++active;
    }
  }
  out.multiplier = sum / active;
  const double denom = std::max(out.multiplier, 1e-12 * std::max(1.0, corr.cwiseAbs().maxCoeff()));

  double violation = 0.0;
  for (Eigen::Index j = 0; j < beta.size(); ++j) {
    if (beta(j) != 0.0) {
      // Active: x_j^T r = mu sign(beta_j).
      violation = std::max(violation, std::abs(corr(j) - out.multiplier * (beta(j) > 0 ? 1.0 : -1.0)));
    } else {
      violation = std::max(violation, std::abs(corr(j)) - out.multiplier);
    }
  }
  out.max_violation = std::max(0.0, violation) / denom;
  const double rnorm = resid.norm();
  out.sqrt_lasso_gamma = rnorm > 0.0 ? out.multiplier / rnorm : 0.0;
  out.pass = out.max_violation <= tol;
  return out;
}

std::vector<SqrtLassoCheck>
check_sqrt_lasso_equivalence(const Dataset& data, const std::vector<double>& grid, double tol)
{
  LassoSolver solver(data.x(), data.y(), tight_config());
  std::vector<SqrtLassoCheck> out;
  for (double lambda : grid) {
    const Eigen::VectorXd beta = solver.solve(lambda).beta;
    out.push_back({lambda, check_constrained_optimality(data.x(), data.y(), beta, tol)});
  }
  return out;
}

double
probe_path_robustness(const Dataset& data,
                      const std::vector<double>& grid,
                      int n_probe,
                      double radius,
                      std::uint64_t seed,
                      const LassoConfig& cfg)
{
  if (!data.truth()) {
    throw InvalidArgument("robustness probe needs ground truth");
  }
  if (n_probe < 1 || !(radius >= 0.0)) {
    throw InvalidArgument("robustness probe needs n_probe >= 1 and radius >= 0");
  }
  const Eigen::VectorXd center = data.x() * data.truth()->beta;
  const auto supports_at = [&](const Eigen::VectorXd& y) {
    LassoSolver solver(data.x(), y, cfg);
    std::vector<Support> out;
    for (double lambda : grid) {
      out.push_back(lasso_support(solver.solve(lambda).beta, cfg));
    }
    return out;
  };
  const auto reference_list = supports_at(center);
  const std::set<Support> reference(reference_list.begin(), reference_list.end());
  if (radius == 0.0) {
    return 1.0;
  }

  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  int stable = 0;
  Eigen::VectorXd direction(center.size());
  for (int k = 0; k < n_probe; ++k) {
    for (Eigen::Index i = 0; i < direction.size(); ++i) {
      direction(i) = unit(gen);
    }
    const auto probed = supports_at(center + radius * direction);
    const bool inside = std::all_of(probed.begin(), probed.end(), [&](const Support& s) {
      return reference.count(s) > 0;
    });
    stable += inside ? 1 : 0;
  }
  return static_cast<double>(stable) / n_probe;
}

} // namespace avp
