#pragma once

#include "avp/lasso.hpp"
#include "avp/model.hpp"

#include <Eigen/Core>
#include <vector>

namespace avp {

enum class GridKind
{
  lasso_geometric,
  thrr_sizes,
};

struct GridSpec
{
  GridKind kind = GridKind::lasso_geometric;
  int r = 10;
  double ratio_floor = 1e-3;
};

//! Geometric grid from ||x^T y||_inf down to ratio_floor times that value.
std::vector<double> lasso_grid(const Eigen::MatrixXd& x,
                               const Eigen::VectorXd& y,
                               const GridSpec& spec);
std::vector<double> lasso_grid(const Dataset& data, const GridSpec& spec);

struct ThrrGrid
{
  std::vector<double> thresholds; // decreasing
  std::vector<std::size_t> target_sizes;
  std::vector<std::size_t> achieved_sizes;
  bool size_unachievable = false;
  Eigen::VectorXd ridge;
};

//! Threshold that keeps exactly the `size` largest magnitudes: the midpoint
//! between the size-th and (size+1)-th largest (0 past the end). If ties make
//! `size` impossible, the nearest achievable size is used instead (the
//! smaller one when two are equally near) and reported in `achieved`.
double threshold_for_size(const Eigen::VectorXd& coefficients,
                          std::size_t size,
                          std::size_t* achieved = nullptr);

//! Thresholds giving support sizes ceil(k p / 50), k = 1..r.
ThrrGrid thrr_grid(const Eigen::MatrixXd& x,
                   const Eigen::VectorXd& y,
                   double gamma,
                   const GridSpec& spec);
ThrrGrid thrr_grid(const Dataset& data, double gamma, const GridSpec& spec);

struct RawSupport
{
  Support support;
  double param = 0.0;
};

//! Dedups (first occurrence wins) and sorts by (cardinality, lexicographic).
SupportPath build_path(std::vector<RawSupport> supports_raw);

Support union_support(const Support& a, const Support& b);

//! Lasso supports along `grid`, warm starting each solve from the previous.
std::vector<RawSupport> lasso_supports(const Eigen::MatrixXd& x,
                                       const Eigen::VectorXd& y,
                                       const std::vector<double>& grid,
                                       const LassoConfig& cfg = {});

//! Thresholded supports of fixed ridge coefficients along `thresholds`.
std::vector<RawSupport> thrr_supports(const Eigen::VectorXd& ridge,
                                      const std::vector<double>& thresholds);

} // namespace avp
