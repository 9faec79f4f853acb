#include "plaquette/geometry/momentum.hpp"

#include <stdexcept>

#include <Eigen/Dense>

namespace plaquette::geometry {

ParticleConfig::ParticleConfig(Eigen::MatrixXd positions, Eigen::MatrixXd momenta)
    : q(std::move(positions)), p(std::move(momenta)) {
  if (q.rows() != p.rows() || q.cols() != p.cols()) {
    throw std::invalid_argument("ParticleConfig: positions and momenta must both be s x l");
  }
}

ParticleConfig ParticleConfig::zero(std::size_t s, std::size_t l) {
  const auto rows = static_cast<Eigen::Index>(s);
  const auto cols = static_cast<Eigen::Index>(l);
  return {Eigen::MatrixXd::Zero(rows, cols), Eigen::MatrixXd::Zero(rows, cols)};
}

Eigen::MatrixXd momentum_O(const ParticleConfig& cfg) {
  const Eigen::MatrixXd qp = cfg.q * cfg.p.transpose();
  return qp - qp.transpose();
}

Eigen::MatrixXd momentum_Sp(const ParticleConfig& cfg) {
  const auto l = cfg.q.cols();
  Eigen::MatrixXd m(2 * l, 2 * l);
  m.topLeftCorner(l, l) = cfg.q.transpose() * cfg.p;
  m.topRightCorner(l, l) = -(cfg.q.transpose() * cfg.q);
  m.bottomLeftCorner(l, l) = cfg.p.transpose() * cfg.p;
  m.bottomRightCorner(l, l) = -(cfg.p.transpose() * cfg.q);
  return m;
}

double sp_membership_residual(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) {
    throw std::invalid_argument("sp_membership_residual: expects a square matrix of even size");
  }
  const auto l = m.rows() / 2;
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * l, 2 * l);
  j.topRightCorner(l, l) = Eigen::MatrixXd::Identity(l, l);
  j.bottomLeftCorner(l, l) = -Eigen::MatrixXd::Identity(l, l);
  const Eigen::MatrixXd jm = j * m;
  return (jm - jm.transpose()).cwiseAbs().maxCoeff();
}

SymmetricProjection symmetric_projection(const ParticleConfig& cfg, double rel_tol) {
  const Eigen::MatrixXcd z = cfg.q.cast<std::complex<double>>() +
                             std::complex<double>(0.0, 1.0) * cfg.p.cast<std::complex<double>>();
  SymmetricProjection out;
  out.matrix = z.transpose() * z;
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(out.matrix);
  const Eigen::VectorXd s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return out;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * s(0)) ++out.rank;
  }
  return out;
}

}  // namespace plaquette::geometry
