#pragma once

// Momentum maps for l particles in R^s: the angular momentum map into so(s)
// and the Sp(l, R) momentum map, plus the projection of the latter onto
// complex symmetric l x l matrices whose rank stratifies the orbit closures.

#include <cstddef>

#include <Eigen/Core>

namespace plaquette::geometry {

/// Positions and momenta of l particles in R^s, stored column-wise (s x l).
struct ParticleConfig {
  Eigen::MatrixXd q;
  Eigen::MatrixXd p;

  ParticleConfig(Eigen::MatrixXd positions, Eigen::MatrixXd momenta);
  static ParticleConfig zero(std::size_t s, std::size_t l);

  std::size_t space_dim() const { return static_cast<std::size_t>(q.rows()); }
  std::size_t particles() const { return static_cast<std::size_t>(q.cols()); }
};

/// sum_j q_j p_j^T - p_j q_j^T (s x s, antisymmetric).
Eigen::MatrixXd momentum_O(const ParticleConfig& cfg);

/// [[ [q_j.p_k], -[q_j.q_k] ], [ [p_j.p_k], -[p_j.q_k] ]] (2l x 2l).
Eigen::MatrixXd momentum_Sp(const ParticleConfig& cfg);

/// max |J M - (J M)^T| with J = [[0, I], [-I, 0]]; zero iff M is in sp(l, R).
double sp_membership_residual(const Eigen::MatrixXd& m);

struct SymmetricProjection {
  Eigen::MatrixXcd matrix;  ///< M_jk = (q_j + i p_j) . (q_k + i p_k)
  std::size_t rank = 0;     ///< singular values above 1e-10 sigma_max
};

SymmetricProjection symmetric_projection(const ParticleConfig& cfg, double rel_tol = 1e-10);

}  // namespace plaquette::geometry
