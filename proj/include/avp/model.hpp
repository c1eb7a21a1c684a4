#pragma once

#include "avp/errors.hpp"

#include <Eigen/Core>
#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace avp {

//! Ground truth attached to synthetic data.
struct Truth
{
  Eigen::VectorXd beta;
  double sigma = 1.0;
};

//! Response plus column-standardized design (every column has norm sqrt(n)).
class Dataset
{
public:
  //! Standardizes `x_raw` and wraps it together with `y`.
  static Dataset standardize(const Eigen::MatrixXd& x_raw,
                             Eigen::VectorXd y,
                             std::optional<Truth> truth = std::nullopt);

  //! Wraps an already standardized design; throws InvalidArgument if any
  //! column norm deviates from sqrt(n) by more than 1e-10 (relative).
  Dataset(Eigen::MatrixXd x,
          Eigen::VectorXd y,
          std::optional<Truth> truth = std::nullopt);

  const Eigen::VectorXd& y() const { return y_; }
  const Eigen::MatrixXd& x() const { return x_; }
  Eigen::Index n() const { return x_.rows(); }
  Eigen::Index p() const { return x_.cols(); }
  const std::optional<Truth>& truth() const { return truth_; }

  //! Same design, different response (truth dropped).
  Dataset with_response(Eigen::VectorXd y) const;

private:
  struct Trusted
  {};
  Dataset(Trusted, Eigen::MatrixXd x, Eigen::VectorXd y, std::optional<Truth> t);

  Eigen::MatrixXd x_;
  Eigen::VectorXd y_;
  std::optional<Truth> truth_;
};

//! Sorted set of 0-based column indices.
class Support
{
public:
  Support() = default;
  //! Indices must be strictly increasing; throws InvalidArgument otherwise.
  explicit Support(std::vector<int> indices);
  Support(std::initializer_list<int> indices);

  //! Sorts and removes duplicates.
  static Support from_unsorted(std::vector<int> indices);
  //! Indices j with |v_j| > zero_tol.
  static Support nonzeros(const Eigen::VectorXd& v, double zero_tol);

  const std::vector<int>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(int j) const;
  bool includes(const Support& other) const;

  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  friend bool operator==(const Support&, const Support&) = default;
  //! Path order: cardinality first, then lexicographic on the index list.
  friend std::strong_ordering operator<=>(const Support& a, const Support& b);

  //! "{1,3,4}" using 1-based indices.
  std::string to_string() const;

private:
  std::vector<int> indices_;
};

//! Candidate supports ordered by (cardinality, lexicographic), all distinct.
struct SupportPath
{
  std::vector<Support> sets;
  //! Tuning parameter that produced each set.
  std::vector<double> source_params;

  std::size_t size() const { return sets.size(); }
  bool empty() const { return sets.empty(); }
  const Support& operator[](std::size_t i) const { return sets[i]; }
};

//! Least-squares fit restricted to a support.
struct RefitEstimate
{
  Support support;
  Eigen::VectorXd coefficients; // length p, zero off-support
  Eigen::VectorXd fitted;       // x * coefficients
  Eigen::Index rank = 0;
  //! Orthonormal basis (n x rank) of the span of the selected columns.
  Eigen::MatrixXd basis;

  //! Orthogonal projection of v onto the span of the selected columns.
  Eigen::VectorXd project(const Eigen::VectorXd& v) const;
};

Eigen::MatrixXd standardize_columns(const Eigen::MatrixXd& x_raw);

//! ||x (estimate - beta_true)||_2^2
double prediction_loss(const Eigen::VectorXd& estimate,
                       const Eigen::VectorXd& beta_true,
                       const Eigen::MatrixXd& x);

//! Index of the smallest set in `path` containing `s_true` (earliest index on
//! ties), or nullopt when no set contains it.
std::optional<std::size_t> oracle_index(const SupportPath& path,
                                        const Support& s_true);

} // namespace avp
