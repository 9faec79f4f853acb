#pragma once

// The costratified Hilbert space of the SU(2) plaquette over the canoe.
//
// States live in the abstract space with orthonormal basis |n>. The vertex
// strata P_+ = {2} and P_- = {-2} each carry a one-dimensional subspace H_+-,
// the orthogonal complement of the states vanishing at +1 (resp. -1), spanned
// by psi_+ and psi_-.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "plaquette/params.hpp"

namespace plaquette::costratified {

enum class Stratum { Plus, Minus, Top };

const char* to_string(Stratum s);

/// Truncated coefficient vector in the basis |n>, n = 0 .. trunc-1.
class StateVector {
 public:
  StateVector(std::vector<std::complex<double>> coeffs, ModelParams params);
  static StateVector basis(std::size_t n, std::size_t trunc, ModelParams params);
  static StateVector from_real(std::span<const double> coeffs, ModelParams params);

  std::size_t trunc() const { return coeffs_.size(); }
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }
  std::complex<double> operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : 0.0; }
  const ModelParams& params() const { return params_; }

  double norm() const;
  /// |a_(trunc-1)|, the last retained coefficient.
  double tail() const { return coeffs_.empty() ? 0.0 : std::abs(coeffs_.back()); }

  /// Value of the L^2[0,pi] realization sum_n a_n sqrt(2) sin((n+1)x).
  std::complex<double> value_at(double x) const;
  /// value_at(pi * num / den) through characters::char_l2_pi_fraction.
  std::complex<double> value_at_pi_fraction(long long num, long long den) const;

  StateVector scaled(std::complex<double> factor) const;
  StateVector operator+(const StateVector& other) const;
  StateVector operator-(const StateVector& other) const;

 private:
  std::vector<std::complex<double>> coeffs_;
  ModelParams params_;
};

/// <a, b> = sum conj(a_n) b_n (conjugate-linear in the first slot). Vectors
/// of different truncation are compared on their common support padded by 0.
std::complex<double> inner(const StateVector& a, const StateVector& b);

/// N^2 = sum_{n>=1} n^2 exp(-t n^2), t = hbar beta^2. Evaluated both as the
/// direct series and as (1/2) e^{-t} theta_3'(e^{-t}); throws ConsistencyError
/// if they differ by more than 1e-10 relative.
double normalization_squared(double hbar_beta2);
double normalization(double hbar_beta2);

/// ceil(sqrt(80/t)) + 8.
std::size_t default_truncation(double hbar_beta2);

/// psi_+ with a_n = (n+1) e^{-t(n+1)^2/2} / N. Throws TruncationError if
/// trunc^2 e^{-t trunc^2} >= 1e-16 N^2.
StateVector psi_plus(const ModelParams& params, std::optional<std::size_t> trunc = std::nullopt);
/// psi_- with a_n = (-1)^n (n+1) e^{-t(n+1)^2/2} / N.
StateVector psi_minus(const ModelParams& params, std::optional<std::size_t> trunc = std::nullopt);
/// psi_+ or psi_- by stratum; Top is rejected with std::invalid_argument.
StateVector stratum_state(Stratum stratum, const ModelParams& params,
                          std::optional<std::size_t> trunc = std::nullopt);

/// Evaluation of the holomorphic realization sum_n a_n C_n^{-1/2} chi^C_n at
/// +1 (Plus) or -1 (Minus): sum_n a_n (+-1)^n (n+1) C_n^{-1/2}.
std::complex<double> vertex_evaluation(const StateVector& state, Stratum stratum,
                                       const ModelParams& params);

/// Pi_+- state = psi_+- <psi_+-, state>.
StateVector project(const StateVector& state, Stratum stratum, const ModelParams& params);

/// Element n >= 1 of the basis chi^C_n - (n+1) chi^C_0 of V_+, rescaled by
/// C_n^{-1/2}: |n> - (n+1) sqrt(C_0/C_n) |0>.
StateVector vplus_basis_vector(std::size_t n, const ModelParams& params, std::size_t trunc);

/// Element n in {0, 2, 3, ...} of the basis chi^C_n + (-1)^n (n+1)/2 chi^C_1
/// of V_-, rescaled by C_n^{-1/2}: |n> + (-1)^n (n+1)/2 sqrt(C_1/C_n) |1>.
StateVector vminus_basis_vector(std::size_t n, const ModelParams& params, std::size_t trunc);

/// Singular values (descending) of the projector onto the orthogonal
/// complement of V_+- within a truncation of size trunc, built from the
/// trunc-1 basis vectors above.
std::vector<double> complement_singular_values(Stratum stratum, const ModelParams& params,
                                               std::size_t trunc);

struct TunnelingOverlap {
  double series = 0.0;  ///< (1/N^2) sum (-1)^(n+1) n^2 e^{-t n^2}
  double theta = 0.0;   ///< theta_3'(-e^{-t}) / theta_3'(e^{-t})
  double resummed = 0.0;  ///< Poisson-resummed (modular) form, accurate as t -> 0
};

/// Three evaluations of <psi_+, psi_->; throws ConsistencyError if any two
/// disagree by more than 1e-10.
TunnelingOverlap tunneling_overlap_forms(double hbar_beta2);
/// The resummed form below t = pi, the direct series above.
double tunneling_overlap(double hbar_beta2);
/// |<psi_+, psi_->|^2.
double tunneling_probability(double hbar_beta2);

}  // namespace plaquette::costratified
