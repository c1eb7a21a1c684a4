#include "avp/simulate.hpp"

#include <cmath>
#include <random>

namespace avp {

namespace {

double
parse_value_suffix(const std::string& text, const std::string& flag)
{
  const std::string prefix = "value:";
  if (text.rfind(prefix, 0) != 0) {
    throw InvalidArgument("unrecognized " + flag + " '" + text + "'");
  }
  const std::string number = text.substr(prefix.size());
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(number, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != number.size() || !(v > 0.0) || !std::isfinite(v)) {
    throw InvalidArgument(flag + " value must be a positive number, got '" + number + "'");
  }
  return v;
}

} // namespace

AMode
AMode::parse(const std::string& text)
{
  if (text == "sigma") {
    return {Kind::sigma, 0.0};
  }
  if (text == "sigma-hat") {
    return {Kind::sigma_hat, 0.0};
  }
  return {Kind::value, parse_value_suffix(text, "a-mode")};
}

std::string
AMode::to_string() const
{
  switch (kind) {
    case Kind::sigma:
      return "sigma";
    case Kind::sigma_hat:
      return "sigma-hat";
    case Kind::value:
      return "value:" + std::to_string(value);
  }
  return "";
}

GammaMode
GammaMode::parse(const std::string& text)
{
  if (text == "sqrt-p") {
    return {Kind::sqrt_p, 0.0};
  }
  return {Kind::value, parse_value_suffix(text, "gamma-mode")};
}

double
GammaMode::resolve(Eigen::Index p) const
{
  return kind == Kind::sqrt_p ? std::sqrt(static_cast<double>(p)) : value;
}

void
SimConfig::validate() const
{
  if (n < 1 || p < 1) {
    throw InvalidArgument("n and p must be positive");
  }
  if (s < 0 || s > p) {
    throw InvalidArgument("s must lie in [0, p]");
  }
  if (!(sigma > 0.0)) {
    throw InvalidArgument("sigma must be positive");
  }
  if (!(rho >= 0.0) || !(rho < 1.0)) {
    throw InvalidArgument("rho must lie in [0, 1)");
  }
  if (reps < 1) {
    throw InvalidArgument("reps must be positive");
  }
  if (r < 2) {
    throw InvalidArgument("r must be at least 2");
  }
  if (cv_folds < 2 || cv_folds > n) {
    throw InvalidArgument("cv folds must lie in [2, n]");
  }
  if (!(delta > 0.0)) {
    throw InvalidArgument("delta must be positive");
  }
}

std::uint64_t
derive_seed(std::uint64_t seed, std::uint64_t rep, std::uint64_t stream)
{
  const auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ rep) ^ stream);
}

Dataset
generate_dataset(const SimConfig& cfg, int rep)
{
  cfg.validate();
  std::mt19937_64 gen(derive_seed(cfg.seed, static_cast<std::uint64_t>(rep), 0));
  std::normal_distribution<double> normal(0.0, 1.0);

  const double a = std::sqrt(1.0 - cfg.rho);
  const double b = std::sqrt(cfg.rho);
  Eigen::MatrixXd x(cfg.n, cfg.p);
  for (int i = 0; i < cfg.n; ++i) {
    const double shared = normal(gen);
    for (int j = 0; j < cfg.p; ++j) {
      x(i, j) = a * normal(gen) + b * shared;
    }
  }
  x = standardize_columns(x);

  Eigen::VectorXd beta = Eigen::VectorXd::Zero(cfg.p);
  beta.head(cfg.s).setConstant(cfg.beta_value);
  Eigen::VectorXd eps(cfg.n);
  for (int i = 0; i < cfg.n; ++i) {
    eps(i) = normal(gen);
  }
  Eigen::VectorXd y = x * beta + cfg.sigma * eps;
  return Dataset(std::move(x), std::move(y), Truth{std::move(beta), cfg.sigma});
}

} // namespace avp
