#pragma once

#include "avp/lasso.hpp"
#include "avp/model.hpp"

#include <cstdint>
#include <vector>

namespace avp {

//! Outcome of comparing supp[b^lambda(Y)] with supp[b^1(Y / lambda)].
struct SymmetryCheck
{
  Support original; // at (Y, lambda)
  Support rescaled; // at (Y / lambda, 1)
  //! Some coordinate sits within the relative margin of its selection
  //! boundary, so the comparison is not meaningful.
  bool boundary = false;
  bool equal = false;
};

inline constexpr double kBoundaryMargin = 1e-6;

SymmetryCheck lasso_scale_symmetry(const Dataset& data, double lambda);
SymmetryCheck thrr_scale_symmetry(const Dataset& data, double gamma, double lambda);

//! KKT certificate for min ||y - x theta||^2 subject to ||theta||_1 <= ||beta||_1.
struct ConstrainedKkt
{
  double radius = 0.0;          // ||beta||_1
  double multiplier = 0.0;      // common |x_j^T r| on the active set
  double max_violation = 0.0;   // relative to the multiplier
  double sqrt_lasso_gamma = 0.0; // multiplier / ||r||_2, the matching sqrt-lasso penalty
  bool pass = false;
};

ConstrainedKkt check_constrained_optimality(const Eigen::MatrixXd& x,
                                            const Eigen::VectorXd& y,
                                            const Eigen::VectorXd& beta,
                                            double tol = 1e-6);

struct SqrtLassoCheck
{
  double lambda = 0.0;
  ConstrainedKkt kkt;
};

//! Solves the lasso at every grid value and certifies that each solution
//! also solves the l1-constrained least-squares problem at its own radius,
//! the form shared with the square-root lasso.
std::vector<SqrtLassoCheck> check_sqrt_lasso_equivalence(const Dataset& data,
                                                         const std::vector<double>& grid,
                                                         double tol = 1e-6);

//! Fraction of perturbed targets X beta + radius * u, u uniform in the unit
//! l_inf ball, whose lasso supports along `grid` all belong to the family of
//! supports at X beta. Directions depend only on `seed`, so results for
//! different radii use the same rescaled perturbations.
double probe_path_robustness(const Dataset& data,
                             const std::vector<double>& grid,
                             int n_probe,
                             double radius,
                             std::uint64_t seed = 0,
                             const LassoConfig& cfg = {});

} // namespace avp
