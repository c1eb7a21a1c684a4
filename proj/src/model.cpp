#include "avp/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace avp {

namespace {

constexpr double kZeroColumnNorm = 1e-12;
constexpr double kStandardizedRelTol = 1e-10;

void
check_shapes(const Eigen::MatrixXd& x, const Eigen::VectorXd& y)
{
  if (x.rows() < 1 || x.cols() < 1) {
    throw InvalidArgument("design must have at least one row and one column");
  }
  if (y.size() != x.rows()) {
    throw DimensionMismatch("response has " + std::to_string(y.size()) +
                            " entries, design has " +
                            std::to_string(x.rows()) + " rows");
  }
}

} // namespace

Eigen::MatrixXd
standardize_columns(const Eigen::MatrixXd& x_raw)
{
  const double target = std::sqrt(static_cast<double>(x_raw.rows()));
  Eigen::MatrixXd out(x_raw.rows(), x_raw.cols());
  for (Eigen::Index j = 0; j < x_raw.cols(); ++j) {
    const double norm = x_raw.col(j).norm();
    if (norm < kZeroColumnNorm) {
      throw ZeroColumn(j, "column " + std::to_string(j + 1) +
                            " has zero norm and cannot be standardized");
    }
    out.col(j) = x_raw.col(j) * (target / norm);
  }
  return out;
}

Dataset
Dataset::standardize(const Eigen::MatrixXd& x_raw,
                     Eigen::VectorXd y,
                     std::optional<Truth> truth)
{
  check_shapes(x_raw, y);
  return Dataset(Trusted{}, standardize_columns(x_raw), std::move(y),
                 std::move(truth));
}

Dataset::Dataset(Eigen::MatrixXd x, Eigen::VectorXd y, std::optional<Truth> truth)
  : x_(std::move(x))
  , y_(std::move(y))
  , truth_(std::move(truth))
{
  check_shapes(x_, y_);
  const double target = std::sqrt(static_cast<double>(x_.rows()));
  for (Eigen::Index j = 0; j < x_.cols(); ++j) {
    if (std::abs(x_.col(j).norm() - target) > kStandardizedRelTol * target) {
      throw InvalidArgument("column " + std::to_string(j + 1) +
                            " is not standardized to norm sqrt(n)");
    }
  }
  if (truth_ && truth_->beta.size() != x_.cols()) {
    throw DimensionMismatch("truth beta length differs from column count");
  }
}

Dataset::Dataset(Trusted, Eigen::MatrixXd x, Eigen::VectorXd y, std::optional<Truth> t)
  : x_(std::move(x))
  , y_(std::move(y))
  , truth_(std::move(t))
{
  if (truth_ && truth_->beta.size() != x_.cols()) {
    throw DimensionMismatch("truth beta length differs from column count");
  }
}

Dataset
Dataset::with_response(Eigen::VectorXd y) const
{
  check_shapes(x_, y);
  return Dataset(Trusted{}, x_, std::move(y), std::nullopt);
}

Support::Support(std::vector<int> indices)
  : indices_(std::move(indices))
{
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] < 0 || (k > 0 && indices_[k] <= indices_[k - 1])) {
      throw InvalidArgument("support indices must be nonnegative and strictly increasing");
    }
  }
}

Support::Support(std::initializer_list<int> indices)
  : Support(std::vector<int>(indices))
{}

Support
Support::from_unsorted(std::vector<int> indices)
{
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return Support(std::move(indices));
}

Support
Support::nonzeros(const Eigen::VectorXd& v, double zero_tol)
{
  std::vector<int> idx;
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    if (std::abs(v(j)) > zero_tol) {
      idx.push_back(static_cast<int>(j));
    }
  }
  return Support(std::move(idx));
}

bool
Support::contains(int j) const
{
  return std::binary_search(indices_.begin(), indices_.end(), j);
}

bool
Support::includes(const Support& other) const
{
  return std::includes(indices_.begin(), indices_.end(),
                       other.indices_.begin(), other.indices_.end());
}

std::strong_ordering
operator<=>(const Support& a, const Support& b)
{
  if (auto c = a.size() <=> b.size(); c != 0) {
    return c;
  }
  return a.indices_ <=> b.indices_;
}

std::string
Support::to_string() const
{
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    os << (k ? "," : "") << indices_[k] + 1;
  }
  os << '}';
  return os.str();
}

Eigen::VectorXd
RefitEstimate::project(const Eigen::VectorXd& v) const
{
  if (basis.cols() == 0) {
    return Eigen::VectorXd::Zero(v.size());
  }
  return basis * (basis.transpose() * v);
}

double
prediction_loss(const Eigen::VectorXd& estimate,
                const Eigen::VectorXd& beta_true,
                const Eigen::MatrixXd& x)
{
  if (estimate.size() != x.cols() || beta_true.size() != x.cols()) {
    throw DimensionMismatch("coefficient vectors must have one entry per column");
  }
  return (x * (estimate - beta_true)).squaredNorm();
}

std::optional<std::size_t>
oracle_index(const SupportPath& path, const Support& s_true)
{
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!path[i].includes(s_true)) {
      continue;
    }
    if (!best || path[i].size() < path[*best].size()) {
      best = i;
    }
  }
  return best;
}

} // namespace avp
