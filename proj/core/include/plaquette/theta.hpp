#pragma once

namespace plaquette::theta {

/// theta_3(Q) = sum_{k in Z} Q^(k^2), |Q| < 1. Throws DomainError otherwise.
double theta3(double nome);

/// d theta_3 / dQ = 2 sum_{k>=1} k^2 Q^(k^2 - 1), |Q| < 1.
double theta3_prime(double nome);

}  // namespace plaquette::theta
