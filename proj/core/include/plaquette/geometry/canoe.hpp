#pragma once

#include <complex>

#include "plaquette/costratified.hpp"

namespace plaquette::geometry {

using costratified::Stratum;

/// tau >= 0 on the canoe over the point X + iY:
/// tau = (1/2) sqrt(Y^2 + w^2/16) - w/8 with w = X^2 + Y^2 - 4.
double canoe_tau(double X, double Y);

/// |Y^2 - (X^2 + Y^2 + 4(tau - 1)) tau|.
double canoe_relation_residual(double X, double Y, double tau);

/// Plus if |Z - 2| < tol, Minus if |Z + 2| < tol, Top otherwise.
Stratum classify_stratum(std::complex<double> Z, double tol = 1e-9);

/// Z = z + 1/z, the Weyl-invariant coordinate on the reduced space.
/// Throws DomainError for z = 0.
std::complex<double> reduce_point(std::complex<double> z);

}  // namespace plaquette::geometry
