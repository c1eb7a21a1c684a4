#pragma once

#include "avp/lasso.hpp"
#include "avp/model.hpp"

#include <cstdint>
#include <vector>

namespace avp {

struct CvConfig
{
  int k = 10;
  std::uint64_t fold_seed = 0;
  //! Score least-squares refits on each training support (lslassoCV,
  //! lsthrrCV) instead of the one-step estimates (lassoCV, thrrCV).
  bool refit_inside = false;
};

struct CvMethod
{
  enum class Kind
  {
    lasso,
    thrr,
  };
  Kind kind = Kind::lasso;
  double gamma = 1.0; // ridge parameter, thrr only

  static CvMethod lasso() { return {Kind::lasso, 1.0}; }
  static CvMethod thrr(double gamma) { return {Kind::thrr, gamma}; }
};

struct CvResult
{
  double chosen_param = 0.0;
  std::size_t chosen_position = 0; // index into the grid
  std::vector<double> cv_errors;   // total held-out squared error per grid value
  //! Support scored for each (fold, grid value).
  std::vector<std::vector<Support>> fold_supports;
  RefitEstimate estimate;          // full-data refit at the chosen parameter
};

//! Seeded Fisher-Yates shuffle of [0, n) cut into k contiguous folds; the
//! first n % k folds get one extra row. Uses only mt19937_64 output so the
//! partition is identical on every platform.
std::vector<std::vector<int>> fold_assignment(int n, int k, std::uint64_t seed);

//! k-fold cross-validation over `grid`. Ties go to the larger parameter
//! (first occurrence among duplicates).
CvResult kfold_cv_select(const Dataset& data,
                         const std::vector<double>& grid,
                         const CvMethod& method,
                         const CvConfig& cfg,
                         const LassoConfig& lasso_cfg = {});

} // namespace avp
