#pragma once

#include "avp/model.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace avp {

enum class ASource
{
  known_sigma,
  estimated_sigma,
  explicit_value,
};

struct AvpConfig
{
  double a = 1.0; // test constant, > 0
  ASource a_source = ASource::explicit_value;
};

//! One pairwise test: refit on set i against the refit on the union of
//! sets i and j. Indices are 0-based path positions.
struct AvpTest
{
  std::size_t i = 0;
  std::size_t j = 0;
  double statistic = 0.0; // ||X b^i - X b^{i,j}||^2
  double budget = 0.0;    // a |S^i| + a |S^{i,j}|
  bool passed = false;
};

struct AvpResult
{
  std::size_t selected_index = 0; // 0-based position in the path
  Support selected_support;
  RefitEstimate estimate;
  std::vector<AvpTest> tests_run;
  //! Distinct least-squares refits computed (cache misses).
  std::size_t refits_computed = 0;
  //! Of those, refits first requested as a union S^{i,j} inside a test.
  std::size_t pair_refits = 0;
};

//! Called once for every refit the selection computes.
using RefitObserver = std::function<void(const RefitEstimate&)>;

//! Adaptive validation for prediction: the first path index whose refit is
//! within budget of the refits on its unions with every set of at least
//! equal cardinality, or the last index if none qualifies.
//!
//! Tests for an index stop at the first failure, and refits are cached by
//! support content for the whole call.
AvpResult avp_select(const Dataset& data,
                     const SupportPath& path,
                     const AvpConfig& cfg,
                     const RefitObserver& observer = {});

//! Same rule without early stopping: every admissible (i, j) pair is tested.
AvpResult avp_select_exhaustive(const Dataset& data,
                                const SupportPath& path,
                                const AvpConfig& cfg);

} // namespace avp
