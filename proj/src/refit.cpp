#include "avp/refit.hpp"

#include <Eigen/SVD>

namespace avp {

RefitEstimate
refit_least_squares(const Eigen::MatrixXd& x,
                    const Eigen::VectorXd& y,
                    const Support& support)
{
  if (y.size() != x.rows()) {
    throw DimensionMismatch("refit: response length differs from row count");
  }
  const Eigen::Index n = x.rows();
  RefitEstimate out;
  out.support = support;
  out.coefficients = Eigen::VectorXd::Zero(x.cols());
  out.fitted = Eigen::VectorXd::Zero(n);
  out.basis.resize(n, 0);
  if (support.empty()) {
    return out;
  }

  const auto k = static_cast<Eigen::Index>(support.size());
  Eigen::MatrixXd xs(n, k);
  for (Eigen::Index c = 0; c < k; ++c) {
    const int j = support.indices()[static_cast<std::size_t>(c)];
    if (j >= x.cols()) {
      throw InvalidArgument("refit: support index out of range");
    }
    xs.col(c) = x.col(j);
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(xs, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? kPseudoInverseRelTol * sv(0) : 0.0;
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) {
    ++rank;
  }
  out.rank = rank;
  if (rank == 0) {
    return out;
  }

  out.basis = svd.matrixU().leftCols(rank);
  const Eigen::VectorXd uty = out.basis.transpose() * y;
  const Eigen::VectorXd local =
    svd.matrixV().leftCols(rank) * (uty.array() / sv.head(rank).array()).matrix();
  for (Eigen::Index c = 0; c < k; ++c) {
    out.coefficients(support.indices()[static_cast<std::size_t>(c)]) = local(c);
  }
  out.fitted = xs * local;
  return out;
}

RefitEstimate
refit_least_squares(const Dataset& data, const Support& support)
{
  return refit_least_squares(data.x(), data.y(), support);
}

} // namespace avp
