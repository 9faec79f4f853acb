#include "plaquette/geometry/canoe.hpp"

#include <cmath>

#include "plaquette/errors.hpp"

namespace plaquette::geometry {

double canoe_tau(double X, double Y) {
  const double w = X * X + Y * Y - 4.0;
  const double root = 0.5 * std::sqrt(Y * Y + w * w / 16.0);
  const double shift = w / 8.0;
  // root^2 - shift^2 = Y^2/4; use the quotient form when the difference cancels.
  if (shift > 0.0) return (0.25 * Y * Y) / (root + shift);
  return root - shift;
}

double canoe_relation_residual(double X, double Y, double tau) {
  return std::abs(Y * Y - (X * X + Y * Y + 4.0 * (tau - 1.0)) * tau);
}

Stratum classify_stratum(std::complex<double> Z, double tol) {
  if (std::abs(Z - 2.0) < tol) return Stratum::Plus;
  if (std::abs(Z + 2.0) < tol) return Stratum::Minus;
  return Stratum::Top;
}

std::complex<double> reduce_point(std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0)) throw DomainError("reduce_point: z must be nonzero");
  return z + 1.0 / z;
}

}  // namespace plaquette::geometry
