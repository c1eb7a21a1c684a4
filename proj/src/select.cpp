#include "avp/select.hpp"

#include "avp/path.hpp"
#include "avp/refit.hpp"

#include <map>
#include <optional>

namespace avp {

namespace {

void
check_inputs(const SupportPath& path, const AvpConfig& cfg)
{
  if (path.empty()) {
    throw EmptyPath("avp: path is empty");
  }
  if (!(cfg.a > 0.0)) {
    throw InvalidArgument("avp: a must be positive");
  }
}

class RefitCache
{
public:
  RefitCache(const Dataset& data, const RefitObserver& observer)
    : data_(data)
    , observer_(observer)
  {}

  const RefitEstimate& get(const Support& s, bool from_union)
  {
    auto it = cache_.find(s);
    if (it != cache_.end()) {
      return it->second;
    }
    ++computed;
    if (from_union) {
      ++pair_computed;
    }
    it = cache_.emplace(s, refit_least_squares(data_, s)).first;
    if (observer_) {
      observer_(it->second);
    }
    return it->second;
  }

  std::size_t computed = 0;
  std::size_t pair_computed = 0;

private:
  const Dataset& data_;
  const RefitObserver& observer_;
  std::map<Support, RefitEstimate> cache_;
};

} // namespace

AvpResult
avp_select(const Dataset& data,
           const SupportPath& path,
           const AvpConfig& cfg,
           const RefitObserver& observer)
{
  check_inputs(path, cfg);
  const std::size_t r = path.size();
  RefitCache cache(data, observer);
  AvpResult result;
  result.selected_index = r - 1;

  // Sets with |S^j| >= |S^i| form a suffix starting at the first set of
  // equal cardinality.
  std::size_t block_start = 0;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    if (path[i].size() != path[block_start].size()) {
      block_start = i;
    }
    const RefitEstimate& base = cache.get(path[i], false);
    const Eigen::VectorXd base_fit = base.fitted;
    bool failed = false;
    for (std::size_t j = block_start; j < r && !failed; ++j) {
      if (j == i) {
        continue;
      }
      const Support joint = union_support(path[i], path[j]);
      const RefitEstimate& other = cache.get(joint, true);
      AvpTest t;
      t.i = i;
      t.j = j;
      t.statistic = (base_fit - other.fitted).squaredNorm();
      t.budget = cfg.a * static_cast<double>(path[i].size() + joint.size());
      t.passed = t.statistic <= t.budget;
      failed = !t.passed;
      result.tests_run.push_back(t);
    }
    if (!failed) {
      result.selected_index = i;
      break;
    }
  }

  result.selected_support = path[result.selected_index];
  result.estimate = cache.get(result.selected_support, false);
  result.refits_computed = cache.computed;
  result.pair_refits = cache.pair_computed;
  return result;
}

AvpResult
avp_select_exhaustive(const Dataset& data, const SupportPath& path, const AvpConfig& cfg)
{
  check_inputs(path, cfg);
  const std::size_t r = path.size();
  std::map<Support, RefitEstimate> refits;
  const auto refit = [&](const Support& s) -> const RefitEstimate& {
    auto it = refits.find(s);
    if (it == refits.end()) {
      it = refits.emplace(s, refit_least_squares(data, s)).first;
    }
    return it->second;
  };

  AvpResult result;
  std::optional<std::size_t> first_ok;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    bool all_pass = true;
    for (std::size_t j = 0; j < r; ++j) {
      if (path[j].size() < path[i].size()) {
        continue;
      }
      const Support joint = union_support(path[i], path[j]);
      AvpTest t;
      t.i = i;
      t.j = j;
      t.statistic = (refit(path[i]).fitted - refit(joint).fitted).squaredNorm();
      t.budget = cfg.a * static_cast<double>(path[i].size() + joint.size());
      t.passed = t.statistic <= t.budget;
      all_pass = all_pass && t.passed;
      result.tests_run.push_back(t);
    }
    if (all_pass && !first_ok) {
      first_ok = i;
    }
  }
  result.selected_index = first_ok.value_or(r - 1);
  result.selected_support = path[result.selected_index];
  result.estimate = refit(result.selected_support);
  result.refits_computed = refits.size();
  return result;
}

} // namespace avp
