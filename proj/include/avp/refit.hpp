#pragma once

#include "avp/model.hpp"

#include <Eigen/Core>

namespace avp {

//! Singular values below this fraction of the largest are treated as zero.
inline constexpr double kPseudoInverseRelTol = 1e-10;

//! Least squares restricted to `support` via a thin SVD pseudo-inverse.
RefitEstimate refit_least_squares(const Eigen::MatrixXd& x,
                                  const Eigen::VectorXd& y,
                                  const Support& support);

RefitEstimate refit_least_squares(const Dataset& data, const Support& support);

} // namespace avp
