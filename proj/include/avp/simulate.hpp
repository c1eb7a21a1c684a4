#pragma once

#include "avp/model.hpp"

#include <cstdint>
#include <string>

namespace avp {

//! How the AVp test constant a is chosen.
struct AMode
{
  enum class Kind
  {
    sigma,     // a = sigma^2 (known noise level)
    sigma_hat, // a = sigma_hat^2 from the scaled lasso
    value,     // fixed a
  };
  Kind kind = Kind::sigma;
  double value = 1.0;

  //! Parses "sigma", "sigma-hat" or "value:<x>".
  static AMode parse(const std::string& text);
  std::string to_string() const;
};

//! Ridge parameter for thresholded ridge regression.
struct GammaMode
{
  enum class Kind
  {
    sqrt_p,
    value,
  };
  Kind kind = Kind::sqrt_p;
  double value = 1.0;

  //! Parses "sqrt-p" or "value:<x>".
  static GammaMode parse(const std::string& text);
  double resolve(Eigen::Index p) const;
};

struct SimConfig
{
  int n = 200;
  int p = 100;
  int s = 10;
  double beta_value = 1.0;
  double sigma = 1.0;
  double rho = 0.5;
  int reps = 50;
  std::uint64_t seed = 1;
  int r = 10;

  AMode a_mode;
  GammaMode gamma_mode;
  int cv_folds = 10;
  double delta = 1e-2; // scaled lasso stopping tolerance

  //! Throws InvalidArgument on inconsistent settings.
  void validate() const;
};

//! SplitMix64 mix of (seed, rep, stream); used to key independent RNG
//! substreams so any repetition can be regenerated on its own.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t rep, std::uint64_t stream);

//! Equicorrelated Gaussian design (rows N(0, (1-rho) I + rho 11^T)),
//! standardized columns, beta = (beta_value x s, 0, ...), Y = X beta + sigma eps.
Dataset generate_dataset(const SimConfig& cfg, int rep);

} // namespace avp
