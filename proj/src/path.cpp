#include "avp/path.hpp"

#include "avp/ridge.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace avp {

std::vector<double>
lasso_grid(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const GridSpec& spec)
{
  if (spec.kind != GridKind::lasso_geometric) {
    throw InvalidArgument("lasso_grid: spec must be lasso_geometric");
  }
  if (spec.r < 2) {
    throw InvalidArgument("lasso_grid: r must be at least 2");
  }
  if (!(spec.ratio_floor > 0.0) || !(spec.ratio_floor < 1.0)) {
    throw InvalidArgument("lasso_grid: ratio_floor must lie in (0, 1)");
  }
  const double lambda_max = (x.transpose() * y).cwiseAbs().maxCoeff();
  if (lambda_max < 1e-12) {
    throw DegenerateGrid("lasso_grid: ||X^T Y||_inf is zero");
  }
  const double ratio = std::pow(spec.ratio_floor, 1.0 / (spec.r - 1));
  std::vector<double> grid(static_cast<std::size_t>(spec.r));
  for (int k = 0; k < spec.r; ++k) {
    grid[static_cast<std::size_t>(k)] = lambda_max * std::pow(ratio, k);
  }
  return grid;
}

std::vector<double>
lasso_grid(const Dataset& data, const GridSpec& spec)
{
  return lasso_grid(data.x(), data.y(), spec);
}

double
threshold_for_size(const Eigen::VectorXd& coefficients, std::size_t size, std::size_t* achieved)
{
  std::vector<double> mags(static_cast<std::size_t>(coefficients.size()));
  for (Eigen::Index j = 0; j < coefficients.size(); ++j) {
    mags[static_cast<std::size_t>(j)] = std::abs(coefficients(j));
  }
  std::sort(mags.begin(), mags.end(), std::greater<>());
  mags.push_back(0.0);
  const std::size_t p = mags.size() - 1;
  size = std::min(size, p);

  // Size s is achievable iff mags[s-1] > mags[s] (s = 0 always is).
  const auto achievable = [&](std::size_t s) { return s == 0 || mags[s - 1] > mags[s]; };
  std::size_t chosen = size;
  if (!achievable(size)) {
    for (std::size_t dist = 1; dist <= p; ++dist) {
      if (size >= dist && achievable(size - dist)) {
        chosen = size - dist;
        break;
      }
      if (size + dist <= p && achievable(size + dist)) {
        chosen = size + dist;
        break;
      }
    }
  }
  if (achieved) {
    *achieved = chosen;
  }
  if (chosen == 0) {
    return mags[0];
  }
  return 0.5 * (mags[chosen - 1] + mags[chosen]);
}

ThrrGrid
thrr_grid(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double gamma, const GridSpec& spec)
{
  if (spec.kind != GridKind::thrr_sizes) {
    throw InvalidArgument("thrr_grid: spec must be thrr_sizes");
  }
  if (spec.r < 1) {
    throw InvalidArgument("thrr_grid: r must be positive");
  }
  ThrrGrid grid;
  grid.ridge = ridge_coefficients(x, y, gamma);
  const auto p = static_cast<std::size_t>(x.cols());
  for (int k = 1; k <= spec.r; ++k) {
    const auto target = std::min<std::size_t>(p, (static_cast<std::size_t>(k) * p + 49) / 50);
    std::size_t achieved = 0;
    const double lambda = threshold_for_size(grid.ridge, target, &achieved);
    grid.target_sizes.push_back(target);
    grid.achieved_sizes.push_back(achieved);
    grid.thresholds.push_back(lambda);
    if (achieved != target) {
      grid.size_unachievable = true;
    }
  }
  return grid;
}

ThrrGrid
thrr_grid(const Dataset& data, double gamma, const GridSpec& spec)
{
  return thrr_grid(data.x(), data.y(), gamma, spec);
}

SupportPath
build_path(std::vector<RawSupport> supports_raw)
{
  if (supports_raw.empty()) {
    throw EmptyPath("build_path: no supports supplied");
  }
  std::vector<RawSupport> distinct;
  for (auto& raw : supports_raw) {
    const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const RawSupport& d) {
      return d.support == raw.support;
    });
    if (!seen) {
      distinct.push_back(std::move(raw));
    }
  }
  std::sort(distinct.begin(), distinct.end(), [](const RawSupport& a, const RawSupport& b) {
    return a.support < b.support;
  });
  SupportPath path;
  for (auto& d : distinct) {
    path.sets.push_back(std::move(d.support));
    path.source_params.push_back(d.param);
  }
  return path;
}

Support
union_support(const Support& a, const Support& b)
{
  std::vector<int> merged;
  merged.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
  return Support(std::move(merged));
}

std::vector<RawSupport>
lasso_supports(const Eigen::MatrixXd& x,
               const Eigen::VectorXd& y,
               const std::vector<double>& grid,
               const LassoConfig& cfg)
{
  LassoSolver solver(x, y, cfg);
  std::vector<RawSupport> out;
  out.reserve(grid.size());
  for (double lambda : grid) {
    const LassoResult fit = solver.solve(lambda);
    out.push_back({lasso_support(fit.beta, cfg), lambda});
  }
  return out;
}

std::vector<RawSupport>
thrr_supports(const Eigen::VectorXd& ridge, const std::vector<double>& thresholds)
{
  std::vector<RawSupport> out;
  out.reserve(thresholds.size());
  for (double lambda : thresholds) {
    out.push_back({threshold_coefficients(ridge, lambda).support, lambda});
  }
  return out;
}

} // namespace avp
