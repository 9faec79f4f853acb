#include "plaquette/costratified.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "plaquette/characters.hpp"
#include "plaquette/errors.hpp"
#include "plaquette/theta.hpp"

namespace plaquette::costratified {

namespace {

constexpr double kSeriesCutoff = 1e-18;
constexpr double kDualRouteTolerance = 1e-10;
constexpr double kTailBound = 1e-16;

void check_t(double t, const char* who) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError(std::string(who) + ": hbar*beta2 must be > 0");
}

double direct_normalization_squared(double t) {
  double sum = 0.0;
  for (long m = 1;; ++m) {
    const double m2 = static_cast<double>(m) * static_cast<double>(m);
    const double term = m2 * std::exp(-t * m2);
    sum += term;
    if (m >= 4 && term <= kSeriesCutoff * sum) break;
  }
  return sum;
}

// a_n of psi_+ before division by N.
double plus_weight(std::size_t n, double t) {
  const double m = static_cast<double>(n) + 1.0;
  return m * std::exp(-0.5 * t * m * m);
}

}  // namespace

const char* to_string(Stratum s) {
  switch (s) {
    case Stratum::Plus: return "plus";
    case Stratum::Minus: return "minus";
    case Stratum::Top: return "top";
  }
  return "unknown";
}

StateVector::StateVector(std::vector<std::complex<double>> coeffs, ModelParams params)
    : coeffs_(std::move(coeffs)), params_(params) {
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("StateVector: coefficients must be finite");
    }
  }
}

StateVector StateVector::basis(std::size_t n, std::size_t trunc, ModelParams params) {
  if (n >= trunc) throw std::invalid_argument("StateVector::basis: n must be < trunc");
  std::vector<std::complex<double>> c(trunc, 0.0);
  c[n] = 1.0;
  return {std::move(c), params};
}

StateVector StateVector::from_real(std::span<const double> coeffs, ModelParams params) {
  return {std::vector<std::complex<double>>(coeffs.begin(), coeffs.end()), params};
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& c : coeffs_) sum += std::norm(c);
  return std::sqrt(sum);
}

std::complex<double> StateVector::value_at(double x) const {
  std::complex<double> sum = 0.0;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    sum += coeffs_[n] * characters::char_l2(static_cast<characters::BasisIndex>(n), x);
  }
  return sum;
}

std::complex<double> StateVector::value_at_pi_fraction(long long num, long long den) const {
  std::complex<double> sum = 0.0;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    sum += coeffs_[n] * characters::char_l2_pi_fraction(static_cast<characters::BasisIndex>(n), num, den);
  }
  return sum;
}

StateVector StateVector::scaled(std::complex<double> factor) const {
  auto c = coeffs_;
  for (auto& v : c) v *= factor;
  return {std::move(c), params_};
}

StateVector StateVector::operator+(const StateVector& other) const {
  std::vector<std::complex<double>> c(std::max(trunc(), other.trunc()), 0.0);
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = (*this)[n] + other[n];
  return {std::move(c), params_};
}

StateVector StateVector::operator-(const StateVector& other) const {
  return *this + other.scaled(-1.0);
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
  const std::size_t common = std::min(a.trunc(), b.trunc());
  std::complex<double> sum = 0.0;
  for (std::size_t n = 0; n < common; ++n) sum += std::conj(a[n]) * b[n];
  return sum;
}

double normalization_squared(double hbar_beta2) {
  check_t(hbar_beta2, "normalization_squared");
  const double series = direct_normalization_squared(hbar_beta2);
  const double nome = std::exp(-hbar_beta2);
  const double via_theta = 0.5 * nome * theta::theta3_prime(nome);
  if (std::abs(series - via_theta) > kDualRouteTolerance * std::abs(series)) {
    throw ConsistencyError("normalization_squared: series and theta forms disagree at t=" +
                           std::to_string(hbar_beta2));
  }
  return series;
}

double normalization(double hbar_beta2) { return std::sqrt(normalization_squared(hbar_beta2)); }

std::size_t default_truncation(double hbar_beta2) {
  check_t(hbar_beta2, "default_truncation");
  return static_cast<std::size_t>(std::ceil(std::sqrt(80.0 / hbar_beta2))) + 8;
}

namespace {

StateVector build_stratum_state(bool alternating, const ModelParams& params,
                                std::optional<std::size_t> trunc) {
  const double t = params.hbar_beta2();
  const double n2 = normalization_squared(t);
  const std::size_t size = trunc.value_or(default_truncation(t));
  const double m = static_cast<double>(size);
  if (size == 0 || !(m * m * std::exp(-t * m * m) < kTailBound * n2)) {
    throw TruncationError("stratum state: truncation " + std::to_string(size) +
                          " too short for hbar*beta2=" + std::to_string(t));
  }
  const double norm = std::sqrt(n2);
  std::vector<std::complex<double>> c(size);
  for (std::size_t n = 0; n < size; ++n) {
    const double a = plus_weight(n, t) / norm;
    c[n] = (alternating && n % 2 == 1) ? -a : a;
  }
  return {std::move(c), params};
}

}  // namespace

StateVector psi_plus(const ModelParams& params, std::optional<std::size_t> trunc) {
  return build_stratum_state(false, params, trunc);
}

StateVector psi_minus(const ModelParams& params, std::optional<std::size_t> trunc) {
  return build_stratum_state(true, params, trunc);
}

StateVector stratum_state(Stratum stratum, const ModelParams& params,
                          std::optional<std::size_t> trunc) {
  switch (stratum) {
    case Stratum::Plus: return psi_plus(params, trunc);
    case Stratum::Minus: return psi_minus(params, trunc);
    case Stratum::Top: break;
  }
  throw std::invalid_argument("stratum_state: the top stratum carries the full space, not a line");
}

std::complex<double> vertex_evaluation(const StateVector& state, Stratum stratum,
                                       const ModelParams& params) {
  if (stratum == Stratum::Top) throw std::invalid_argument("vertex_evaluation: expects Plus or Minus");
  const double sign_step = stratum == Stratum::Plus ? 1.0 : -1.0;
  std::complex<double> sum = 0.0;
  double sign = 1.0;
  for (std::size_t n = 0; n < state.trunc(); ++n) {
    const double chi = sign * static_cast<double>(n + 1);
    const double scale = characters::peter_weyl_inverse_sqrt(static_cast<characters::BasisIndex>(n),
                                                             params.hbar(), params.hbar_beta2());
    sum += state[n] * chi * scale;
    sign *= sign_step;
  }
  return sum;
}

StateVector project(const StateVector& state, Stratum stratum, const ModelParams& params) {
  const std::size_t trunc = std::max(state.trunc(), default_truncation(params.hbar_beta2()));
  const StateVector psi = stratum_state(stratum, params, trunc);
  return psi.scaled(inner(psi, state));
}

StateVector vplus_basis_vector(std::size_t n, const ModelParams& params, std::size_t trunc) {
  if (n == 0 || n >= trunc) throw std::invalid_argument("vplus_basis_vector: need 1 <= n < trunc");
  const double t = params.hbar_beta2();
  const double m = static_cast<double>(n) + 1.0;
  std::vector<std::complex<double>> c(trunc, 0.0);
  c[n] = 1.0;
  c[0] = -m * std::exp(-0.5 * t * (m * m - 1.0));
  return {std::move(c), params};
}

StateVector vminus_basis_vector(std::size_t n, const ModelParams& params, std::size_t trunc) {
  if (n == 1 || n >= trunc) throw std::invalid_argument("vminus_basis_vector: need n != 1, n < trunc");
  const double t = params.hbar_beta2();
  const double m = static_cast<double>(n) + 1.0;
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  std::vector<std::complex<double>> c(trunc, 0.0);
  c[n] = 1.0;
  c[1] = sign * 0.5 * m * std::exp(-0.5 * t * (m * m - 4.0));
  return {std::move(c), params};
}

std::vector<double> complement_singular_values(Stratum stratum, const ModelParams& params,
                                               std::size_t trunc) {
  if (trunc < 3) throw std::invalid_argument("complement_singular_values: trunc must be >= 3");
  const auto size = static_cast<Eigen::Index>(trunc);
  Eigen::MatrixXd span(size, size - 1);
  Eigen::Index col = 0;
  for (std::size_t n = 0; n < trunc; ++n) {
    std::optional<StateVector> v;
    if (stratum == Stratum::Plus && n != 0) v = vplus_basis_vector(n, params, trunc);
    if (stratum == Stratum::Minus && n != 1) v = vminus_basis_vector(n, params, trunc);
    if (stratum == Stratum::Top) throw std::invalid_argument("complement_singular_values: Plus or Minus");
    if (!v) continue;
    for (Eigen::Index k = 0; k < size; ++k) span(k, col) = (*v)[static_cast<std::size_t>(k)].real();
    ++col;
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(span);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(size, size - 1);
  const Eigen::MatrixXd complement = Eigen::MatrixXd::Identity(size, size) - q * q.transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(complement);
  const Eigen::VectorXd s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

namespace {

// Poisson summation of n^2 e^{-t n^2} with and without (-1)^n. With
// u = pi^2 / t the overlap is
//   2 sum_{k>=0} (2u(k+1/2)^2 - 1) e^{-u(k+1/2)^2} / (1 + 2 sum_{k>=1} (1 - 2uk^2) e^{-uk^2}).
double resummed_overlap(double t) {
  const double u = std::numbers::pi * std::numbers::pi / t;
  double num = 0.0;
  double den = 1.0;
  for (int k = 0; k < 100000; ++k) {
    const double h = (k + 0.5) * (k + 0.5);
    const double half = 2.0 * (2.0 * u * h - 1.0) * std::exp(-u * h);
    const double kk = static_cast<double>(k + 1) * (k + 1);
    const double whole = 2.0 * (1.0 - 2.0 * u * kk) * std::exp(-u * kk);
    num += half;
    den += whole;
    if (std::abs(half) <= kSeriesCutoff * std::abs(num) && std::abs(whole) <= kSeriesCutoff * std::abs(den)) break;
  }
  return num / den;
}

}  // namespace

TunnelingOverlap tunneling_overlap_forms(double hbar_beta2) {
  check_t(hbar_beta2, "tunneling_overlap");
  const double t = hbar_beta2;
  const double n2 = normalization_squared(t);
  double alternating = 0.0;
  for (long m = 1;; ++m) {
    const double m2 = static_cast<double>(m) * static_cast<double>(m);
    const double term = m2 * std::exp(-t * m2);
    alternating += (m % 2 == 1) ? term : -term;
    if (m >= 4 && term <= kSeriesCutoff * n2) break;
  }
  TunnelingOverlap forms;
  forms.series = alternating / n2;
  const double nome = std::exp(-t);
  forms.theta = theta::theta3_prime(-nome) / theta::theta3_prime(nome);
  forms.resummed = resummed_overlap(t);
  if (std::abs(forms.series - forms.theta) > kDualRouteTolerance ||
      std::abs(forms.series - forms.resummed) > kDualRouteTolerance) {
    throw ConsistencyError("tunneling_overlap: series, theta and resummed forms disagree at t=" + std::to_string(t));
  }
  return forms;
}

double tunneling_overlap(double hbar_beta2) {
  const auto forms = tunneling_overlap_forms(hbar_beta2);
  // below the self-dual point the direct sum cancels down to roundoff
  return hbar_beta2 < std::numbers::pi ? forms.resummed : forms.series;
}

double tunneling_probability(double hbar_beta2) {
  const double overlap = tunneling_overlap(hbar_beta2);
  return overlap * overlap;
}

}  // namespace plaquette::costratified
