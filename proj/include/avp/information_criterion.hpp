#pragma once

#include "avp/model.hpp"

#include <vector>

namespace avp {

struct IcResult
{
  std::size_t selected_index = 0; // 0-based path position
  RefitEstimate estimate;
  std::vector<double> criterion; // per path index
};

//! AIC/BIC-style comparator: argmin ||Y - X b^i||^2 + penalty |S^i| over the
//! refitted path. Ties go to the smaller support.
IcResult aic_bic_select(const Dataset& data, const SupportPath& path, double penalty_per_param);

} // namespace avp
