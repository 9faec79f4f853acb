#pragma once

// SU(2) characters in the three realizations of the reduced Hilbert space
// basis |n>: real characters on the maximal torus, the L^2[0,pi] functions
// sqrt(2) sin((n+1)x), and complex characters on the complexified torus.

#include <complex>

#include "plaquette/params.hpp"

namespace plaquette::characters {

/// Index n of the basis vector |n> (twice the spin).
using BasisIndex = unsigned;

/// sin((n+1)x)/sin(x), with the removable singularities at 0 and pi filled in.
double char_real(BasisIndex n, double x);

/// sqrt(2) sin((n+1)x): the image of |n> in L^2[0,pi] with measure dx/pi.
double char_l2(BasisIndex n, double x);

/// char_l2 at x = pi * num / den, reduced exactly so that the grid points
/// x = 0 and x = pi give exactly 0. Requires den > 0 and num >= 0.
double char_l2_pi_fraction(BasisIndex n, long long num, long long den);

/// z^n + z^(n-2) + ... + z^(-n). Throws DomainError for z = 0.
std::complex<double> char_complex(BasisIndex n, std::complex<double> z);

/// Laplace eigenvalue eps_n = beta^2 n (n+2).
double laplace_eigenvalue(BasisIndex n, double beta2);
double laplace_eigenvalue(BasisIndex n, const ModelParams& params);

/// C_n = (hbar pi)^(3/2) exp(hbar beta^2 (n+1)^2). beta2 = 0 is accepted here
/// (the constant then degenerates to (hbar pi)^(3/2)); throws std::overflow_error
/// when the exponential is not representable.
double peter_weyl_constant(BasisIndex n, double hbar, double beta2);
double peter_weyl_constant(BasisIndex n, const ModelParams& params);

/// C_n^(-1/2), evaluated in log space so it stays finite where C_n overflows.
double peter_weyl_inverse_sqrt(BasisIndex n, double hbar, double hbar_beta2);

/// Density sin^2(x)/pi of the normalized Haar measure pushed to [0,pi] (vol K = 1).
double haar_density(double x);

}  // namespace plaquette::characters
