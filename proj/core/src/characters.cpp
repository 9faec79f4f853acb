#include "plaquette/characters.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace plaquette::characters {

namespace {
constexpr double kSingularThreshold = 1e-8;
}

double char_real(BasisIndex n, double x) {
  const double s = std::sin(x);
  if (std::abs(s) < kSingularThreshold) {
    // x is within 1e-8 of k*pi; the limit is (+-1)^(n k) (n+1).
    const auto k = static_cast<long long>(std::llround(x / std::numbers::pi));
    const bool negative = (k % 2 != 0) && (n % 2 != 0);
    return negative ? -static_cast<double>(n + 1) : static_cast<double>(n + 1);
  }
  return std::sin((n + 1.0) * x) / s;
}

double char_l2(BasisIndex n, double x) { return std::numbers::sqrt2 * std::sin((n + 1.0) * x); }

double char_l2_pi_fraction(BasisIndex n, long long num, long long den) {
  if (den <= 0 || num < 0) throw std::invalid_argument("char_l2_pi_fraction: need den > 0 and num >= 0");
  // (n+1) num / den taken mod 2
  const long long m = static_cast<long long>((static_cast<unsigned long long>(n) + 1) *
                                             static_cast<unsigned long long>(num) %
                                             (2ULL * static_cast<unsigned long long>(den)));
  if (m == 0 || m == den) return 0.0;
  return std::numbers::sqrt2 * std::sin(std::numbers::pi * static_cast<double>(m) / static_cast<double>(den));
}

std::complex<double> char_complex(BasisIndex n, std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0)) throw DomainError("char_complex: z must be nonzero");
  // z^(-n) (1 + w + ... + w^n) with w = z^2, summed by Horner.
  const std::complex<double> w = z * z;
  std::complex<double> acc(1.0, 0.0);
  for (BasisIndex j = 0; j < n; ++j) acc = acc * w + 1.0;
  return acc * std::pow(z, -static_cast<int>(n));
}

double laplace_eigenvalue(BasisIndex n, double beta2) {
  const double m = n;
  return beta2 * m * (m + 2.0);
}

double laplace_eigenvalue(BasisIndex n, const ModelParams& params) {
  return laplace_eigenvalue(n, params.beta2());
}

double peter_weyl_constant(BasisIndex n, double hbar, double beta2) {
  if (!(hbar > 0.0)) throw DomainError("peter_weyl_constant: hbar must be > 0");
  if (!(beta2 >= 0.0)) throw DomainError("peter_weyl_constant: beta2 must be >= 0");
  const double m = n + 1.0;
  const double value = std::pow(hbar * std::numbers::pi, 1.5) * std::exp(hbar * beta2 * m * m);
  if (!std::isfinite(value)) throw std::overflow_error("peter_weyl_constant: C_n overflows double");
  return value;
}

double peter_weyl_constant(BasisIndex n, const ModelParams& params) {
  return peter_weyl_constant(n, params.hbar(), params.beta2());
}

double peter_weyl_inverse_sqrt(BasisIndex n, double hbar, double hbar_beta2) {
  const double m = n + 1.0;
  return std::exp(-0.75 * std::log(hbar * std::numbers::pi) - 0.5 * hbar_beta2 * m * m);
}

double haar_density(double x) {
  const double s = std::sin(x);
  return s * s / std::numbers::pi;
}

}  // namespace plaquette::characters
