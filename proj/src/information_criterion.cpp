#include "avp/information_criterion.hpp"

#include "avp/refit.hpp"

namespace avp {

IcResult
aic_bic_select(const Dataset& data, const SupportPath& path, double penalty_per_param)
{
  if (path.empty()) {
    throw EmptyPath("aic_bic_select: path is empty");
  }
  if (!(penalty_per_param >= 0.0)) {
    throw InvalidArgument("aic_bic_select: penalty must be nonnegative");
  }
  IcResult result;
  std::vector<RefitEstimate> refits;
  refits.reserve(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    refits.push_back(refit_least_squares(data, path[i]));
    result.criterion.push_back((data.y() - refits.back().fitted).squaredNorm() +
                               penalty_per_param * static_cast<double>(path[i].size()));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const double c = result.criterion[i];
    const double c_best = result.criterion[best];
    if (c < c_best || (c == c_best && path[i].size() < path[best].size())) {
      best = i;
    }
  }
  result.selected_index = best;
  result.estimate = std::move(refits[best]);
  return result;
}

} // namespace avp
