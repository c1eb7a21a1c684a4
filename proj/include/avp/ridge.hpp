#pragma once

#include "avp/model.hpp"

#include <Eigen/Core>

namespace avp {

struct ThrrParams
{
  double gamma = 1.0;  // ridge parameter, > 0
  double lambda = 0.0; // threshold, >= 0
};

struct ThrrEstimate
{
  Eigen::VectorXd coefficients; // ridge coefficients with |.| <= lambda zeroed
  Support support;
};

//! (x^T x + gamma I)^{-1} x^T y, solved in whichever of the p x p or n x n
//! forms is smaller.
Eigen::VectorXd ridge_coefficients(const Eigen::MatrixXd& x,
                                   const Eigen::VectorXd& y,
                                   double gamma);

Eigen::VectorXd ridge_fit(const Dataset& data, double gamma);

//! Keeps entries with magnitude strictly greater than `lambda`.
ThrrEstimate threshold_coefficients(const Eigen::VectorXd& ridge, double lambda);

//! Thresholded ridge regression.
ThrrEstimate thrr_estimate(const Dataset& data, const ThrrParams& params);

} // namespace avp
