// Benchmark driver: synthetic experiments, diagnostics and result summaries.

#include "avp/diagnostics.hpp"
#include "avp/experiment.hpp"
#include "avp/path.hpp"
#include "avp/results_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

struct DataFlags
{
  avp::SimConfig cfg;
  std::string a_mode = "sigma";
  std::string gamma_mode = "sqrt-p";

  void add_to(CLI::App& app)
  {
    app.add_option("--n", cfg.n, "sample size")->capture_default_str();
    app.add_option("--p", cfg.p, "number of features")->capture_default_str();
    app.add_option("--s", cfg.s, "size of the true active set")->capture_default_str();
    app.add_option("--beta-value", cfg.beta_value, "value of the active coefficients")
      ->capture_default_str();
    app.add_option("--sigma", cfg.sigma, "noise level")->capture_default_str();
    app.add_option("--rho", cfg.rho, "equicorrelation of the design")->capture_default_str();
    app.add_option("--reps", cfg.reps, "repetitions")->capture_default_str();
    app.add_option("--seed", cfg.seed, "master seed")->capture_default_str();
    app.add_option("--r", cfg.r, "grid size")->capture_default_str();
    app.add_option("--folds", cfg.cv_folds, "cross-validation folds")->capture_default_str();
    app.add_option("--delta", cfg.delta, "scaled lasso stopping tolerance")->capture_default_str();
    app.add_option("--a-mode", a_mode, "sigma | sigma-hat | value:<x>")->capture_default_str();
    app.add_option("--gamma-mode", gamma_mode, "sqrt-p | value:<x>")->capture_default_str();
  }

  avp::SimConfig resolve() const
  {
    avp::SimConfig out = cfg;
    out.a_mode = avp::AMode::parse(a_mode);
    out.gamma_mode = avp::GammaMode::parse(gamma_mode);
    out.validate();
    return out;
  }
};

int
run_simulate(const avp::SimConfig& cfg,
             const std::string& methods,
             const std::string& out,
             const std::string& format)
{
  const auto fmt = avp::parse_format(format);
  const auto records = avp::run_experiment(cfg, avp::parse_methods(methods));
  if (out.empty() || out == "-") {
    avp::write_results(records, std::cout, fmt);
  } else {
    avp::write_results(records, out, fmt);
    std::cerr << "wrote " << records.size() << " records to " << out << '\n';
  }
  return 0;
}

int
run_diagnose(const avp::SimConfig& cfg, int rep, int probes, double radius)
{
  const avp::Dataset data = avp::generate_dataset(cfg, rep);
  const auto grid = avp::lasso_grid(data, avp::GridSpec{avp::GridKind::lasso_geometric, cfg.r, 1e-3});
  const double gamma = cfg.gamma_mode.resolve(data.p());
  const auto tgrid = avp::thrr_grid(data, gamma, avp::GridSpec{avp::GridKind::thrr_sizes, cfg.r, 1e-3});

  std::printf("data: n=%d p=%d s=%d sigma=%g rho=%g seed=%llu rep=%d\n", cfg.n, cfg.p, cfg.s,
              cfg.sigma, cfg.rho, static_cast<unsigned long long>(cfg.seed), rep);

  int failures = 0;
  std::printf("\nscale symmetry (supp[b^l(Y)] == supp[b^1(Y/l)])\n");
  for (double lambda : grid) {
    const auto c = avp::lasso_scale_symmetry(data, lambda);
    std::printf("  lasso l=%-12.6g |S|=%-4zu %s\n", lambda, c.original.size(),
                c.boundary ? "boundary" : (c.equal ? "ok" : "MISMATCH"));
    failures += (!c.boundary && !c.equal) ? 1 : 0;
  }
  for (double lambda : tgrid.thresholds) {
    if (!(lambda > 0.0)) {
      continue;
    }
    const auto c = avp::thrr_scale_symmetry(data, gamma, lambda);
    std::printf("  thrr  l=%-12.6g |S|=%-4zu %s\n", lambda, c.original.size(),
                c.boundary ? "boundary" : (c.equal ? "ok" : "MISMATCH"));
    failures += (!c.boundary && !c.equal) ? 1 : 0;
  }

  std::printf("\nsquare-root lasso equivalence (l1-constrained KKT)\n");
  for (const auto& c : avp::check_sqrt_lasso_equivalence(data, grid)) {
    std::printf("  l=%-12.6g radius=%-12.6g sqrt-lasso gamma=%-12.6g violation=%.3g %s\n", c.lambda,
                c.kkt.radius, c.kkt.sqrt_lasso_gamma, c.kkt.max_violation, c.kkt.pass ? "ok" : "FAIL");
    failures += c.kkt.pass ? 0 : 1;
  }

  const double frac = avp::probe_path_robustness(data, grid, probes, radius,
                                                 avp::derive_seed(cfg.seed, static_cast<std::uint64_t>(rep), 2));
  std::printf("\npath robustness: %d probes at l_inf radius %g -> stable fraction %.4f\n", probes, radius,
              frac);
  return failures == 0 ? 0 : kExitValidation;
}

int
run_summarize(const std::string& path)
{
  const auto summary = avp::summarize(avp::read_results(path));
  std::printf("%-14s %6s %12s %12s %12s %14s\n", "method", "count", "loss_q1", "loss_median", "loss_q3",
              "wall_ms_median");
  for (const auto& s : summary) {
    std::printf("%-14s %6zu %12.5g %12.5g %12.5g %14.5g\n", s.method.c_str(), s.count, s.loss_q1,
                s.loss_median, s.loss_q3, s.wall_ms_median);
  }
  return 0;
}

} // namespace

int
main(int argc, char** argv)
{
  CLI::App app{"Two-step sparse prediction benchmarks: adaptive validation vs cross-validation"};
  app.require_subcommand(1);

  DataFlags sim_flags;
  std::string methods = "lasso_path,lassoAVp,lassoAVp_hat,lassoCV,lslassoCV,thrrAVp_hat,lsthrrCV";
  std::string out;
  std::string format = "csv";
  auto* simulate = app.add_subcommand("simulate", "run synthetic experiments and write per-method records");
  sim_flags.add_to(*simulate);
  simulate->add_option("--methods", methods, "comma separated methods, or 'all'")->capture_default_str();
  simulate->add_option("--out", out, "output file (stdout when omitted)");
  simulate->add_option("--format", format, "csv | json")->capture_default_str();

  DataFlags diag_flags;
  int rep = 0;
  int probes = 100;
  double radius = 0.1;
  auto* diagnose = app.add_subcommand("diagnose", "scale symmetry, square-root lasso and robustness probes");
  diag_flags.add_to(*diagnose);
  diagnose->add_option("--rep", rep, "repetition to generate")->capture_default_str();
  diagnose->add_option("--probes", probes, "number of robustness probes")->capture_default_str();
  diagnose->add_option("--radius", radius, "l_inf probe radius")->capture_default_str();

  std::string results_path;
  auto* summarize = app.add_subcommand("summarize", "per-method loss quartiles and median wall time");
  summarize->add_option("results", results_path, "CSV or JSON results file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*simulate) {
      return run_simulate(sim_flags.resolve(), methods, out, format);
    }
    if (*diagnose) {
      return run_diagnose(diag_flags.resolve(), rep, probes, radius);
    }
    return run_summarize(results_path);
  } catch (const avp::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}
