#include "avp/experiment.hpp"

#include "avp/cv.hpp"
#include "avp/information_criterion.hpp"
#include "avp/path.hpp"
#include "avp/refit.hpp"
#include "avp/scaled_lasso.hpp"
#include "avp/select.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace avp {

namespace {

using Clock = std::chrono::steady_clock;

double
elapsed_ms(Clock::time_point start)
{
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct MethodInfo
{
  Method method;
  const char* name;
};

constexpr MethodInfo kMethods[] = {
  {Method::lasso_path, "lasso_path"},
  {Method::lslasso_path, "lslasso_path"},
  {Method::lasso_avp, "lassoAVp"},
  {Method::lasso_avp_hat, "lassoAVp_hat"},
  {Method::lasso_cv, "lassoCV"},
  {Method::lslasso_cv, "lslassoCV"},
  {Method::lasso_ic, "lassoIC"},
  {Method::thrr_path, "thrr_path"},
  {Method::lsthrr_path, "lsthrr_path"},
  {Method::thrr_avp, "thrrAVp"},
  {Method::thrr_avp_hat, "thrrAVp_hat"},
  {Method::thrr_cv, "thrrCV"},
  {Method::lsthrr_cv, "lsthrrCV"},
  {Method::thrr_ic, "thrrIC"},
};

bool
is_lasso_family(Method m)
{
  switch (m) {
    case Method::lasso_path:
    case Method::lslasso_path:
    case Method::lasso_avp:
    case Method::lasso_avp_hat:
    case Method::lasso_cv:
    case Method::lslasso_cv:
    case Method::lasso_ic:
      return true;
    default:
      return false;
  }
}

// One support path together with what it cost to build.
struct FamilyPath
{
  SupportPath path;
  std::vector<double> grid;
  double build_ms = 0.0;
  std::optional<std::size_t> oracle;
};

class Repetition
{
public:
  Repetition(const SimConfig& cfg, int rep)
    : cfg_(cfg)
    , rep_(rep)
    , data_(generate_dataset(cfg, rep))
    , s_true_(Support::nonzeros(data_.truth()->beta, 0.0))
    , gamma_(cfg.gamma_mode.resolve(data_.p()))
  {}

  ExperimentRecord run(Method m)
  {
    ExperimentRecord rec = blank(m);
    switch (m) {
      case Method::lasso_path:
      case Method::thrr_path:
        run_oracle(rec, family(m));
        break;
      case Method::lslasso_path:
      case Method::lsthrr_path:
        run_best_refit(rec, family(m));
        break;
      case Method::lasso_avp:
      case Method::thrr_avp:
        run_avp(rec, family(m), false);
        break;
      case Method::lasso_avp_hat:
      case Method::thrr_avp_hat:
        run_avp(rec, family(m), true);
        break;
      case Method::lasso_cv:
      case Method::thrr_cv:
        run_cv(rec, m, false);
        break;
      case Method::lslasso_cv:
      case Method::lsthrr_cv:
        run_cv(rec, m, true);
        break;
      case Method::lasso_ic:
      case Method::thrr_ic:
        run_ic(rec, family(m));
        break;
    }
    return rec;
  }

private:
  ExperimentRecord blank(Method m) const
  {
    ExperimentRecord rec;
    rec.method = method_name(m);
    rec.rep = rep_;
    rec.seed = cfg_.seed;
    rec.n = cfg_.n;
    rec.p = cfg_.p;
    rec.s = cfg_.s;
    rec.sigma = cfg_.sigma;
    rec.rho = cfg_.rho;
    rec.r = cfg_.r;
    return rec;
  }

  const FamilyPath& family(Method m)
  {
    if (is_lasso_family(m)) {
      if (!lasso_) {
        lasso_ = build_lasso();
      }
      return *lasso_;
    }
    if (!thrr_) {
      thrr_ = build_thrr();
    }
    return *thrr_;
  }

  FamilyPath build_lasso() const
  {
    FamilyPath fp;
    const auto start = Clock::now();
    fp.grid = lasso_grid(data_, GridSpec{GridKind::lasso_geometric, cfg_.r, 1e-3});
    fp.path = build_path(lasso_supports(data_.x(), data_.y(), fp.grid));
    fp.build_ms = elapsed_ms(start);
    fp.oracle = oracle_index(fp.path, s_true_);
    return fp;
  }

  FamilyPath build_thrr() const
  {
    FamilyPath fp;
    const auto start = Clock::now();
    const ThrrGrid grid = thrr_grid(data_, gamma_, GridSpec{GridKind::thrr_sizes, cfg_.r, 1e-3});
    fp.grid = grid.thresholds;
    fp.path = build_path(thrr_supports(grid.ridge, grid.thresholds));
    fp.build_ms = elapsed_ms(start);
    fp.oracle = oracle_index(fp.path, s_true_);
    return fp;
  }

  // sigma_hat is computed once per repetition; its cost is charged to each
  // method that uses it.
  const NoiseEstimate& noise()
  {
    if (!noise_) {
      const auto start = Clock::now();
      noise_ = scaled_lasso_sigma(data_, cfg_.delta);
      noise_ms_ = elapsed_ms(start);
    }
    return *noise_;
  }

  double test_constant(bool force_hat, double* extra_ms)
  {
    if (force_hat || cfg_.a_mode.kind == AMode::Kind::sigma_hat) {
      const double s = noise().sigma_hat;
      *extra_ms += noise_ms_;
      return s * s;
    }
    if (cfg_.a_mode.kind == AMode::Kind::sigma) {
      return cfg_.sigma * cfg_.sigma;
    }
    return cfg_.a_mode.value;
  }

  void finish(ExperimentRecord& rec, const FamilyPath& fp, const RefitEstimate& est)
  {
    rec.loss = prediction_loss(est.coefficients, data_.truth()->beta, data_.x());
    rec.support_size = static_cast<int>(est.support.size());
    if (fp.oracle) {
      rec.oracle_size = static_cast<int>(fp.path[*fp.oracle].size());
    }
    rec.path_length = fp.path.size();
    rec.distinct_cardinalities = true;
    for (std::size_t i = 1; i < fp.path.size(); ++i) {
      if (fp.path[i].size() == fp.path[i - 1].size()) {
        rec.distinct_cardinalities = false;
      }
    }
  }

  void check_identity(ExperimentRecord& rec, const RefitEstimate& est)
  {
    rec.identity_gap = std::max(rec.identity_gap, loss_identity_gap(data_, est));
    ++rec.refits_checked;
  }

  void run_oracle(ExperimentRecord& rec, const FamilyPath& fp)
  {
    const auto start = Clock::now();
    const std::size_t idx = fp.oracle.value_or(fp.path.size() - 1);
    const RefitEstimate est = refit_least_squares(data_, fp.path[idx]);
    rec.wall_ms = fp.build_ms + elapsed_ms(start);
    rec.selected = static_cast<double>(idx + 1);
    rec.refits_computed = 1;
    check_identity(rec, est);
    finish(rec, fp, est);
  }

  void run_best_refit(ExperimentRecord& rec, const FamilyPath& fp)
  {
    const auto start = Clock::now();
    std::vector<RefitEstimate> refits;
    for (const auto& s : fp.path.sets) {
      refits.push_back(refit_least_squares(data_, s));
    }
    rec.wall_ms = fp.build_ms + elapsed_ms(start);
    std::size_t best = 0;
    double best_loss = 0.0;
    for (std::size_t i = 0; i < refits.size(); ++i) {
      check_identity(rec, refits[i]);
      const double loss = prediction_loss(refits[i].coefficients, data_.truth()->beta, data_.x());
      if (i == 0 || loss < best_loss) {
        best = i;
        best_loss = loss;
      }
    }
    rec.selected = static_cast<double>(best + 1);
    rec.refits_computed = refits.size();
    finish(rec, fp, refits[best]);
  }

  void run_avp(ExperimentRecord& rec, const FamilyPath& fp, bool force_hat)
  {
    double extra_ms = 0.0;
    const double a = test_constant(force_hat, &extra_ms);
    rec.a = a;
    double observer_ms = 0.0;
    const RefitObserver observer = [&](const RefitEstimate& est) {
      const auto t = Clock::now();
      check_identity(rec, est);
      observer_ms += elapsed_ms(t);
    };
    const auto start = Clock::now();
    const AvpResult res = avp_select(
      data_, fp.path,
      AvpConfig{a, force_hat ? ASource::estimated_sigma : ASource::known_sigma}, observer);
    rec.wall_ms = fp.build_ms + extra_ms + elapsed_ms(start) - observer_ms;
    rec.selected = static_cast<double>(res.selected_index + 1);
    rec.refits_computed = res.refits_computed;
    rec.pair_refits = res.pair_refits;
    finish(rec, fp, res.estimate);
  }

  void run_cv(ExperimentRecord& rec, Method m, bool refit_inside)
  {
    const FamilyPath& fp = family(m);
    CvConfig cv;
    cv.k = cfg_.cv_folds;
    cv.fold_seed = derive_seed(cfg_.seed, static_cast<std::uint64_t>(rep_), 1);
    cv.refit_inside = refit_inside;
    const auto start = Clock::now();
    CvResult res;
    if (is_lasso_family(m)) {
      // The grid is part of the method's own cost.
      const auto grid = lasso_grid(data_, GridSpec{GridKind::lasso_geometric, cfg_.r, 1e-3});
      res = kfold_cv_select(data_, grid, CvMethod::lasso(), cv);
    } else {
      const ThrrGrid grid = thrr_grid(data_, gamma_, GridSpec{GridKind::thrr_sizes, cfg_.r, 1e-3});
      res = kfold_cv_select(data_, grid.thresholds, CvMethod::thrr(gamma_), cv);
    }
    rec.wall_ms = elapsed_ms(start);
    rec.selected = res.chosen_param;
    rec.refits_computed = refit_inside ? static_cast<std::size_t>(cv.k) * fp.grid.size() + 1 : 1;
    check_identity(rec, res.estimate);
    finish(rec, fp, res.estimate);
  }

  void run_ic(ExperimentRecord& rec, const FamilyPath& fp)
  {
    double extra_ms = 0.0;
    const double a = test_constant(false, &extra_ms);
    rec.a = a;
    const auto start = Clock::now();
    const IcResult res = aic_bic_select(data_, fp.path, 2.0 * a);
    rec.wall_ms = fp.build_ms + extra_ms + elapsed_ms(start);
    rec.selected = static_cast<double>(res.selected_index + 1);
    rec.refits_computed = fp.path.size();
    check_identity(rec, res.estimate);
    finish(rec, fp, res.estimate);
  }

  const SimConfig& cfg_;
  int rep_;
  Dataset data_;
  Support s_true_;
  double gamma_;
  std::optional<FamilyPath> lasso_;
  std::optional<FamilyPath> thrr_;
  std::optional<NoiseEstimate> noise_;
  double noise_ms_ = 0.0;
};

} // namespace

std::string
method_name(Method m)
{
  for (const auto& info : kMethods) {
    if (info.method == m) {
      return info.name;
    }
  }
  return "unknown";
}

Method
parse_method(const std::string& name)
{
  for (const auto& info : kMethods) {
    if (name == info.name) {
      return info.method;
    }
  }
  throw InvalidArgument("unknown method '" + name + "'");
}

const std::vector<Method>&
all_methods()
{
  static const std::vector<Method> methods = [] {
    std::vector<Method> out;
    for (const auto& info : kMethods) {
      out.push_back(info.method);
    }
    return out;
  }();
  return methods;
}

std::vector<Method>
parse_methods(const std::string& list)
{
  std::vector<Method> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) {
      continue;
    }
    if (item == "all") {
      return all_methods();
    }
    const Method m = parse_method(item);
    if (std::find(out.begin(), out.end(), m) == out.end()) {
      out.push_back(m);
    }
  }
  if (out.empty()) {
    throw InvalidArgument("method list is empty");
  }
  return out;
}

double
loss_identity_gap(const Dataset& data, const RefitEstimate& refit)
{
  const Eigen::VectorXd signal = data.x() * data.truth()->beta;
  const Eigen::VectorXd noise = data.y() - signal;
  const double loss = (refit.fitted - signal).squaredNorm();
  const double decomposed =
    refit.project(noise).squaredNorm() + (signal - refit.project(signal)).squaredNorm();
  return std::abs(loss - decomposed) / (1.0 + loss);
}

std::vector<ExperimentRecord>
run_experiment(const SimConfig& cfg, const std::vector<Method>& methods)
{
  cfg.validate();
  if (methods.empty()) {
    throw InvalidArgument("run_experiment: no methods given");
  }
  std::vector<ExperimentRecord> records;
  for (int rep = 0; rep < cfg.reps; ++rep) {
    Repetition repetition(cfg, rep);
    for (Method m : methods) {
      records.push_back(repetition.run(m));
    }
  }
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return a.method != b.method ? a.method < b.method : a.rep < b.rep;
  });
  return records;
}

} // namespace avp
