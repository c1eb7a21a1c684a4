#pragma once

// Small independent reference implementations shared by the unit tests and
// the acceptance binary. They trade speed for transparency: explicit normal
// equations, sign-pattern enumeration, no coordinate descent.

#include "avp/model.hpp"

#include <Eigen/LU>

#include <optional>
#include <vector>

namespace avp::oracle {

inline Eigen::MatrixXd
columns(const Eigen::MatrixXd& x, const std::vector<int>& idx)
{
  Eigen::MatrixXd out(x.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t c = 0; c < idx.size(); ++c) {
    out.col(static_cast<Eigen::Index>(c)) = x.col(idx[c]);
  }
  return out;
}

inline Eigen::MatrixXd
rows(const Eigen::MatrixXd& x, const std::vector<int>& idx)
{
  Eigen::MatrixXd out(static_cast<Eigen::Index>(idx.size()), x.cols());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    out.row(static_cast<Eigen::Index>(r)) = x.row(idx[r]);
  }
  return out;
}

// Exact minimizer of ||y - x b||^2 + 2 lambda ||b||_1 for small p, found by
// enumerating every sign pattern and keeping the one satisfying the KKT
// conditions. Requires the active columns to be linearly independent.
inline std::optional<Eigen::VectorXd>
lasso_by_enumeration(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double lambda)
{
  const Eigen::Index p = x.cols();
  std::vector<int> sign(static_cast<std::size_t>(p), -1);
  const double slack = 1e-10 * (1.0 + lambda);
  for (;;) {
    std::vector<int> active;
    for (Eigen::Index j = 0; j < p; ++j) {
      if (sign[static_cast<std::size_t>(j)] != 0) {
        active.push_back(static_cast<int>(j));
      }
    }
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
    bool ok = true;
    if (!active.empty()) {
      const Eigen::MatrixXd xa = columns(x, active);
      Eigen::VectorXd rhs = xa.transpose() * y;
      for (std::size_t c = 0; c < active.size(); ++c) {
        rhs(static_cast<Eigen::Index>(c)) -= lambda * sign[static_cast<std::size_t>(active[c])];
      }
      const Eigen::FullPivLU<Eigen::MatrixXd> lu(xa.transpose() * xa);
      ok = lu.isInvertible();
      if (ok) {
        const Eigen::VectorXd ba = lu.solve(rhs);
        for (std::size_t c = 0; c < active.size(); ++c) {
          const double v = ba(static_cast<Eigen::Index>(c));
          ok = ok && v * sign[static_cast<std::size_t>(active[c])] > 0;
          beta(active[c]) = v;
        }
      }
    }
    if (ok) {
      const Eigen::VectorXd corr = x.transpose() * (y - x * beta);
      for (Eigen::Index j = 0; j < p && ok; ++j) {
        if (sign[static_cast<std::size_t>(j)] == 0) {
          ok = std::abs(corr(j)) <= lambda + slack;
        }
      }
      if (ok) {
        return beta;
      }
    }
    // Next pattern in {-1, 0, 1}^p.
    Eigen::Index j = 0;
    while (j < p && sign[static_cast<std::size_t>(j)] == 1) {
      sign[static_cast<std::size_t>(j)] = -1;
      ++j;
    }
    if (j == p) {
      return std::nullopt;
    }
    ++sign[static_cast<std::size_t>(j)];
  }
}

// Least squares on the columns `support` through the normal equations.
inline Eigen::VectorXd
refit_normal_equations(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const std::vector<int>& support)
{
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(x.cols());
  if (support.empty()) {
    return beta;
  }
  const Eigen::MatrixXd xs = columns(x, support);
  const Eigen::VectorXd bs = (xs.transpose() * xs).inverse() * (xs.transpose() * y);
  for (std::size_t c = 0; c < support.size(); ++c) {
    beta(support[c]) = bs(static_cast<Eigen::Index>(c));
  }
  return beta;
}

inline std::vector<int>
nonzero_indices(const Eigen::VectorXd& v, double tol)
{
  std::vector<int> idx;
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    if (std::abs(v(j)) > tol) {
      idx.push_back(static_cast<int>(j));
    }
  }
  return idx;
}

// Ridge through an explicit p x p inverse, then hard thresholding at lambda.
inline Eigen::VectorXd
thrr_explicit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double gamma, double lambda)
{
  const Eigen::MatrixXd g =
    x.transpose() * x + gamma * Eigen::MatrixXd::Identity(x.cols(), x.cols());
  Eigen::VectorXd b = g.inverse() * (x.transpose() * y);
  for (auto& v : b) {
    if (!(std::abs(v) > lambda)) {
      v = 0.0;
    }
  }
  return b;
}

// Total held-out squared error per grid value, fold by fold.
// `gamma` <= 0 selects the lasso, otherwise thresholded ridge.
inline std::vector<double>
cv_errors(const Eigen::MatrixXd& x,
          const Eigen::VectorXd& y,
          const std::vector<std::vector<int>>& folds,
          const std::vector<double>& grid,
          double gamma,
          bool refit)
{
  const auto n = static_cast<int>(x.rows());
  std::vector<double> total(grid.size(), 0.0);
  for (const auto& fold : folds) {
    std::vector<int> train;
    for (int i = 0; i < n; ++i) {
      bool held = false;
      for (int f : fold) {
        held = held || f == i;
      }
      if (!held) {
        train.push_back(i);
      }
    }
    const Eigen::MatrixXd xt = rows(x, train);
    Eigen::VectorXd yt(static_cast<Eigen::Index>(train.size()));
    for (std::size_t k = 0; k < train.size(); ++k) {
      yt(static_cast<Eigen::Index>(k)) = y(train[k]);
    }
    for (std::size_t g = 0; g < grid.size(); ++g) {
      Eigen::VectorXd b;
      if (gamma <= 0) {
        b = lasso_by_enumeration(xt, yt, grid[g]).value();
      } else {
        b = thrr_explicit(xt, yt, gamma, grid[g]);
      }
      if (refit) {
        b = refit_normal_equations(xt, yt, nonzero_indices(b, 1e-10));
      }
      for (int i : fold) {
        const double e = y(i) - x.row(i).dot(b);
        total[g] += e * e;
      }
    }
  }
  return total;
}

} // namespace avp::oracle
