#include "avp/lasso.hpp"

#include <cmath>
#include <numeric>

namespace avp {

namespace {

double
soft_threshold(double z, double lambda)
{
  if (z > lambda) {
    return z - lambda;
  }
  if (z < -lambda) {
    return z + lambda;
  }
  return 0.0;
}

} // namespace

double
lasso_objective(const Eigen::MatrixXd& x,
                const Eigen::VectorXd& y,
                const Eigen::VectorXd& theta,
                double lambda)
{
  return (y - x * theta).squaredNorm() + 2.0 * lambda * theta.lpNorm<1>();
}

LassoSolver::LassoSolver(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, LassoConfig cfg)
  : x_(x)
  , y_(y)
  , cfg_(cfg)
  , xty_(x.transpose() * y)
  , col_sqnorm_(x.colwise().squaredNorm().transpose())
  , gram_(static_cast<std::size_t>(x.cols()))
  , beta_(Eigen::VectorXd::Zero(x.cols()))
  , grad_(xty_)
{
  if (y.size() != x.rows()) {
    throw DimensionMismatch("lasso: response length differs from row count");
  }
  if (!(cfg_.tol > 0) || !(cfg_.support_zero_tol > 0) || cfg_.max_iter < 1) {
    throw InvalidArgument("lasso: tol, support_zero_tol and max_iter must be positive");
  }
}

const Eigen::VectorXd&
LassoSolver::gram_column(Eigen::Index j)
{
  auto& col = gram_[static_cast<std::size_t>(j)];
  if (col.size() == 0) {
    col = x_.transpose() * x_.col(j);
  }
  return col;
}

void
LassoSolver::set_coefficient(Eigen::Index j, double value)
{
  const double delta = value - beta_(j);
  if (delta != 0.0) {
    grad_.noalias() -= delta * gram_column(j);
    beta_(j) = value;
  }
}

double
LassoSolver::sweep(const std::vector<Eigen::Index>& coords, double lambda)
{
  double max_update = 0.0;
  for (Eigen::Index j : coords) {
    const double sq = col_sqnorm_(j);
    if (sq == 0.0) {
      continue;
    }
    const double z = grad_(j) + sq * beta_(j);
    const double updated = soft_threshold(z, lambda) / sq;
    max_update = std::max(max_update, std::abs(updated - beta_(j)));
    set_coefficient(j, updated);
  }
  return max_update;
}

LassoResult
LassoSolver::solve(double lambda, const Eigen::VectorXd& start)
{
  if (start.size() != x_.cols()) {
    throw DimensionMismatch("lasso: warm start has wrong length");
  }
  for (Eigen::Index j = 0; j < start.size(); ++j) {
    set_coefficient(j, start(j));
  }
  return solve(lambda);
}

LassoResult
LassoSolver::solve(double lambda)
{
  if (!(lambda >= 0.0)) {
    throw InvalidArgument("lasso: lambda must be nonnegative");
  }
  LassoResult result;
  const auto record = [&] {
    if (cfg_.record_objective) {
      result.objective_trace.push_back(lasso_objective(x_, y_, beta_, lambda));
    }
  };

  std::vector<Eigen::Index> all(static_cast<std::size_t>(x_.cols()));
  std::iota(all.begin(), all.end(), Eigen::Index{0});
  std::vector<Eigen::Index> active;

  // Full sweeps decide convergence; between them, cycle on the active set.
  while (result.sweeps < cfg_.max_iter) {
    const double full_update = sweep(all, lambda);
    ++result.sweeps;
    record();
    if (full_update < cfg_.tol) {
      result.converged = true;
      break;
    }
    active.clear();
    for (Eigen::Index j = 0; j < beta_.size(); ++j) {
      if (beta_(j) != 0.0) {
        active.push_back(j);
      }
    }
    while (result.sweeps < cfg_.max_iter) {
      const double update = sweep(active, lambda);
      ++result.sweeps;
      record();
      if (update < cfg_.tol) {
        break;
      }
    }
  }
  result.beta = beta_;
  return result;
}

Eigen::VectorXd
lasso_fit(const Dataset& data, double lambda, const LassoConfig& cfg)
{
  LassoSolver solver(data.x(), data.y(), cfg);
  LassoResult res = solver.solve(lambda);
  if (!res.converged) {
    throw NoConvergence(std::move(res.beta),
                        "lasso: no convergence after " + std::to_string(res.sweeps) +
                          " sweeps at lambda=" + std::to_string(lambda));
  }
  return std::move(res.beta);
}

Support
lasso_support(const Eigen::VectorXd& beta_hat, const LassoConfig& cfg)
{
  return Support::nonzeros(beta_hat, cfg.support_zero_tol);
}

} // namespace avp
