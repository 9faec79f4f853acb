#pragma once

#include <cmath>
#include <limits>

#include "plaquette/errors.hpp"

namespace plaquette {

/// Physical parameters of the single-plaquette model.
///
/// Stored as (hbar, beta2, nu) with nu = 1/g^2. The free theory nu = 0
/// corresponds to an infinite coupling constant g, which coupling_g() reports
/// as +inf. Every derived quantity used downstream depends only on
/// hbar_beta2() = hbar*beta2 and nu_tilde() = nu/(hbar^2 beta2).
class ModelParams {
 public:
  static ModelParams from_coupling(double hbar, double beta2, double coupling_g) {
    if (!(coupling_g > 0.0)) throw DomainError("ModelParams: coupling_g must be > 0");
    return ModelParams(hbar, beta2, 1.0 / (coupling_g * coupling_g));
  }

  static ModelParams from_nu_tilde(double hbar, double beta2, double nu_tilde) {
    if (!(nu_tilde >= 0.0) || !std::isfinite(nu_tilde)) {
      throw DomainError("ModelParams: nu_tilde must be finite and >= 0");
    }
    ModelParams p(hbar, beta2, 0.0);
    p.nu_ = nu_tilde * hbar * hbar * beta2;
    p.nu_tilde_ = nu_tilde;
    return p;
  }

  /// Parameters fixed only through the two combinations that matter; hbar = 1.
  static ModelParams reduced(double hbar_beta2, double nu_tilde) {
    return from_nu_tilde(1.0, hbar_beta2, nu_tilde);
  }

  double hbar() const { return hbar_; }
  double beta2() const { return beta2_; }
  double nu() const { return nu_; }
  double coupling_g() const {
    return nu_ == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / std::sqrt(nu_);
  }
  double nu_tilde() const { return nu_tilde_; }
  double hbar_beta2() const { return hbar_ * beta2_; }
  /// hbar^2 beta^2, the natural energy unit.
  double energy_unit() const { return hbar_ * hbar_ * beta2_; }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  ModelParams(double hbar, double beta2, double nu) : hbar_(hbar), beta2_(beta2), nu_(nu) {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw DomainError("ModelParams: hbar must be > 0");
    if (!(beta2 > 0.0) || !std::isfinite(beta2)) throw DomainError("ModelParams: beta2 must be > 0");
    nu_tilde_ = nu_ / (hbar_ * hbar_ * beta2_);
  }

  double hbar_;
  double beta2_;
  double nu_;
  double nu_tilde_ = 0.0;
};

}  // namespace plaquette
