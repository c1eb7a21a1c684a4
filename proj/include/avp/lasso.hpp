#pragma once

#include "avp/model.hpp"

#include <Eigen/Core>
#include <vector>

namespace avp {

struct LassoConfig
{
  int max_iter = 10000;          // sweep cap
  double tol = 1e-7;             // on the largest coordinate update of a sweep
  double support_zero_tol = 1e-10;
  bool record_objective = false; // fill LassoResult::objective_trace
};

struct LassoResult
{
  Eigen::VectorXd beta;
  int sweeps = 0;
  bool converged = false;
  //! Objective after every sweep (only when requested).
  std::vector<double> objective_trace;
};

//! ||y - x theta||_2^2 + 2 lambda ||theta||_1
double lasso_objective(const Eigen::MatrixXd& x,
                       const Eigen::VectorXd& y,
                       const Eigen::VectorXd& theta,
                       double lambda);

//! Cyclic coordinate descent for the lasso with covariance updates.
//!
//! The solver keeps the gradient x^T (y - x theta) up to date and caches
//! Gram columns x^T x_j lazily, so repeated solves along a decreasing grid
//! (warm started from the previous solution) only pay for the columns that
//! ever become active. Columns need not be standardized.
class LassoSolver
{
public:
  LassoSolver(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, LassoConfig cfg = {});

  //! Solves at `lambda`, warm starting from the previous solution.
  LassoResult solve(double lambda);
  //! Solves at `lambda` starting from `start`.
  LassoResult solve(double lambda, const Eigen::VectorXd& start);

  //! ||x^T y||_inf, the smallest lambda with an all-zero solution.
  double lambda_max() const { return xty_.cwiseAbs().maxCoeff(); }
  const LassoConfig& config() const { return cfg_; }

private:
  const Eigen::VectorXd& gram_column(Eigen::Index j);
  void set_coefficient(Eigen::Index j, double value);
  double sweep(const std::vector<Eigen::Index>& coords, double lambda);

  const Eigen::MatrixXd& x_;
  const Eigen::VectorXd& y_;
  LassoConfig cfg_;
  Eigen::VectorXd xty_;
  Eigen::VectorXd col_sqnorm_;
  std::vector<Eigen::VectorXd> gram_; // empty until first needed
  Eigen::VectorXd beta_;
  Eigen::VectorXd grad_; // x^T (y - x beta)
};

//! Lasso solution at `lambda`; throws NoConvergence (carrying the last
//! iterate) if the sweep cap is reached.
Eigen::VectorXd lasso_fit(const Dataset& data, double lambda, const LassoConfig& cfg = {});

Support lasso_support(const Eigen::VectorXd& beta_hat, const LassoConfig& cfg = {});

} // namespace avp
