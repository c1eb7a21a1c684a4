#pragma once

#include "avp/simulate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace avp {

enum class Method
{
  lasso_path,   // one lasso path; loss of the oracle refit
  lslasso_path, // lasso path plus a refit of every set; best refit loss
  lasso_avp,    // AVp on the lasso path, a from SimConfig::a_mode
  lasso_avp_hat,
  lasso_cv,     // CV on one-step lasso predictions, refitted at the end
  lslasso_cv,   // CV on refitted lasso predictions
  lasso_ic,     // residual + 2a|S| over the lasso path
  thrr_path,
  lsthrr_path,
  thrr_avp,
  thrr_avp_hat,
  thrr_cv,
  lsthrr_cv,
  thrr_ic,
};

std::string method_name(Method m);
//! Inverse of method_name; throws InvalidArgument for unknown names.
Method parse_method(const std::string& name);
//! Parses a comma separated method list; "all" expands to every method.
std::vector<Method> parse_methods(const std::string& list);
const std::vector<Method>& all_methods();

struct ExperimentRecord
{
  std::string method;
  int rep = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int p = 0;
  int s = 0;
  double sigma = 0.0;
  double rho = 0.0;
  int r = 0;
  double loss = 0.0;
  int support_size = 0;
  std::optional<int> oracle_size;
  double wall_ms = 0.0;
  //! Chosen tuning parameter (CV) or 1-based path index (AVp, IC, paths).
  double selected = 0.0;

  // In-memory diagnostics, not serialized.
  std::size_t refits_computed = 0;
  std::size_t pair_refits = 0;
  std::size_t path_length = 0;   // distinct sets in the path
  bool distinct_cardinalities = false;
  double a = 0.0;                // test constant used (AVp, IC)
  double identity_gap = 0.0;     // max relative loss-decomposition error over refits
  std::size_t refits_checked = 0;
};

//! Runs every method on cfg.reps synthetic repetitions. Records are sorted
//! by (method, rep).
std::vector<ExperimentRecord> run_experiment(const SimConfig& cfg, const std::vector<Method>& methods);

//! |loss - (||P eps||^2 + ||(I - P) X beta||^2)| / (1 + loss) for one refit.
double loss_identity_gap(const Dataset& data, const RefitEstimate& refit);

} // namespace avp
