#include "avp/cv.hpp"

#include "avp/refit.hpp"
#include "avp/ridge.hpp"

#include <limits>
#include <map>
#include <numeric>
#include <random>

namespace avp {

namespace {

// Unbiased draw from [0, bound) by rejection on the raw 64-bit stream.
std::uint64_t
bounded_draw(std::mt19937_64& gen, std::uint64_t bound)
{
  const std::uint64_t limit =
    std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t u;
  do {
    u = gen();
  } while (u >= limit);
  return u % bound;
}

Eigen::MatrixXd
take_rows(const Eigen::MatrixXd& x, const std::vector<int>& rows)
{
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), x.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out.row(static_cast<Eigen::Index>(r)) = x.row(rows[r]);
  }
  return out;
}

Eigen::VectorXd
take_rows(const Eigen::VectorXd& y, const std::vector<int>& rows)
{
  Eigen::VectorXd out(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out(static_cast<Eigen::Index>(r)) = y(rows[r]);
  }
  return out;
}

// One-step coefficient vectors for every grid value, fitted on (x, y).
std::vector<Eigen::VectorXd>
fit_grid(const Eigen::MatrixXd& x,
         const Eigen::VectorXd& y,
         const std::vector<double>& grid,
         const CvMethod& method,
         const LassoConfig& lasso_cfg)
{
  std::vector<Eigen::VectorXd> fits;
  fits.reserve(grid.size());
  if (method.kind == CvMethod::Kind::lasso) {
    LassoSolver solver(x, y, lasso_cfg);
    // Repeated values reuse the first fit so their errors tie exactly.
    std::map<double, std::size_t> seen;
    for (double lambda : grid) {
      const auto [it, fresh] = seen.emplace(lambda, fits.size());
      fits.push_back(fresh ? solver.solve(lambda).beta : fits[it->second]);
    }
  } else {
    const Eigen::VectorXd ridge = ridge_coefficients(x, y, method.gamma);
    for (double lambda : grid) {
      fits.push_back(threshold_coefficients(ridge, lambda).coefficients);
    }
  }
  return fits;
}

Support
support_of(const Eigen::VectorXd& coef, const CvMethod& method, const LassoConfig& lasso_cfg)
{
  // Thresholded ridge zeroes entries exactly.
  return method.kind == CvMethod::Kind::lasso ? lasso_support(coef, lasso_cfg)
                                              : Support::nonzeros(coef, 0.0);
}

} // namespace

std::vector<std::vector<int>>
fold_assignment(int n, int k, std::uint64_t seed)
{
  if (k < 2) {
    throw InvalidArgument("cv: k must be at least 2");
  }
  if (k > n) {
    throw FoldTooSmall("cv: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 gen(seed);
  for (std::size_t i = order.size() - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(bounded_draw(gen, i + 1));
    std::swap(order[i], order[j]);
  }
  std::vector<std::vector<int>> folds(static_cast<std::size_t>(k));
  std::size_t pos = 0;
  for (int f = 0; f < k; ++f) {
    const int size = n / k + (f < n % k ? 1 : 0);
    folds[static_cast<std::size_t>(f)].assign(order.begin() + static_cast<std::ptrdiff_t>(pos),
                                              order.begin() + static_cast<std::ptrdiff_t>(pos + size));
    pos += static_cast<std::size_t>(size);
  }
  return folds;
}

CvResult
kfold_cv_select(const Dataset& data,
                const std::vector<double>& grid,
                const CvMethod& method,
                const CvConfig& cfg,
                const LassoConfig& lasso_cfg)
{
  if (grid.empty()) {
    throw InvalidArgument("cv: grid is empty");
  }
  const int n = static_cast<int>(data.n());
  const auto folds = fold_assignment(n, cfg.k, cfg.fold_seed);

  CvResult result;
  result.cv_errors.assign(grid.size(), 0.0);
  std::vector<char> held(static_cast<std::size_t>(n));
  for (const auto& fold : folds) {
    if (fold.empty()) {
      throw FoldTooSmall("cv: empty fold");
    }
    std::fill(held.begin(), held.end(), 0);
    for (int row : fold) {
      held[static_cast<std::size_t>(row)] = 1;
    }
    std::vector<int> train;
    for (int row = 0; row < n; ++row) {
      if (!held[static_cast<std::size_t>(row)]) {
        train.push_back(row);
      }
    }
    const Eigen::MatrixXd x_train = take_rows(data.x(), train);
    const Eigen::VectorXd y_train = take_rows(data.y(), train);
    const Eigen::MatrixXd x_test = take_rows(data.x(), fold);
    const Eigen::VectorXd y_test = take_rows(data.y(), fold);

    const auto fits = fit_grid(x_train, y_train, grid, method, lasso_cfg);
    auto& supports = result.fold_supports.emplace_back();
    for (std::size_t g = 0; g < grid.size(); ++g) {
      supports.push_back(support_of(fits[g], method, lasso_cfg));
      Eigen::VectorXd coef = fits[g];
      if (cfg.refit_inside) {
        coef = refit_least_squares(x_train, y_train, supports.back()).coefficients;
      }
      result.cv_errors[g] += (y_test - x_test * coef).squaredNorm();
    }
  }

  std::size_t best = 0;
  for (std::size_t g = 1; g < grid.size(); ++g) {
    const double e = result.cv_errors[g];
    const double e_best = result.cv_errors[best];
    if (e < e_best || (e == e_best && grid[g] > grid[best])) {
      best = g;
    }
  }
  result.chosen_position = best;
  result.chosen_param = grid[best];

  const auto full = fit_grid(data.x(), data.y(), {grid[best]}, method, lasso_cfg);
  result.estimate = refit_least_squares(data, support_of(full.front(), method, lasso_cfg));
  return result;
}

} // namespace avp
