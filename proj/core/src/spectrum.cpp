#include "plaquette/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "plaquette/errors.hpp"

namespace plaquette::spectrum {

namespace {
constexpr double kOverlapTail = 1e-12;
}

Eigen::MatrixXd SymTridiagonal::dense() const {
  const auto n = static_cast<Eigen::Index>(diag.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) m(k, k) = diag[static_cast<std::size_t>(k)];
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    m(k, k + 1) = off[static_cast<std::size_t>(k)];
    m(k + 1, k) = off[static_cast<std::size_t>(k)];
  }
  return m;
}

SymTridiagonal hamiltonian_matrix(const ModelParams& params, std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("hamiltonian_matrix: dim must be >= 2");
  SymTridiagonal h;
  h.diag.resize(dim);
  h.off.assign(dim - 1, -0.5 * params.nu());
  const double kinetic = 0.5 * params.energy_unit();
  for (std::size_t k = 0; k < dim; ++k) {
    const double m = static_cast<double>(k);
    h.diag[k] = kinetic * m * (m + 2.0) + 1.5 * params.nu();
  }
  return h;
}

std::vector<double> hamiltonian_eigenvalues(const ModelParams& params, std::size_t dim) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian_matrix(params, dim).dense(),
                                                              Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError("hamiltonian_eigenvalues: solver failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double energy_from_characteristic(double b, const ModelParams& params) {
  return 0.5 * params.energy_unit() * (0.25 * b + 3.0 * params.nu_tilde() - 1.0);
}

double energy(unsigned n, const ModelParams& params) {
  return energy_from_characteristic(mathieu::solve(n, mathieu_q(params)).b, params);
}

StateVector eigenstate_from_solution(const mathieu::MathieuSolution& sol, const ModelParams& params) {
  std::vector<std::complex<double>> c(sol.coeffs.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    const bool odd = ((sol.n + k) % 2) != 0;
    c[k] = odd ? -sol.coeffs[k] : sol.coeffs[k];
  }
  return {std::move(c), params};
}

SpectralResult eigenstate(unsigned n, const ModelParams& params, std::optional<std::size_t> trunc) {
  const double q = mathieu_q(params);
  const mathieu::MathieuSolution sol = trunc ? mathieu::solve(n, q, *trunc) : mathieu::solve(n, q);
  return {n, energy_from_characteristic(sol.b, params), eigenstate_from_solution(sol, params), params};
}

double eigenfunction_x(const mathieu::MathieuSolution& sol, double x) {
  const double sign = sol.n % 2 == 0 ? -1.0 : 1.0;
  return sign * std::numbers::sqrt2 * mathieu::se(sol, 0.5 * (x - std::numbers::pi));
}

double eigenfunction_x(unsigned n, const ModelParams& params, double x) {
  return eigenfunction_x(mathieu::solve(n, mathieu_q(params)), x);
}

double stratum_overlap(const mathieu::MathieuSolution& sol, double hbar_beta2, Stratum stratum) {
  if (stratum == Stratum::Top) throw std::invalid_argument("stratum_overlap: expects Plus or Minus");
  const double t = hbar_beta2;
  const double norm = costratified::normalization(t);
  const std::size_t size = sol.coeffs.size();
  const double last_index = static_cast<double>(size);
  const double psi_tail = last_index * std::exp(-0.5 * t * last_index * last_index) / norm;
  if (std::abs(sol.tail()) > kOverlapTail || psi_tail > kOverlapTail) {
    throw TruncationError("stratum_overlap: truncation " + std::to_string(size) +
                          " leaves a tail above 1e-12");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < size; ++k) {
    const double m = static_cast<double>(k) + 1.0;
    double term = m * std::exp(-0.5 * t * m * m) * sol.coeffs[k];
    if (stratum == Stratum::Plus && k % 2 == 1) term = -term;
    sum += term;
  }
  const double prefactor = sol.n % 2 == 0 ? 1.0 : -1.0;
  return prefactor * sum / norm;
}

std::size_t joint_truncation(const ModelParams& params, unsigned levels) {
  const unsigned top = levels == 0 ? 0 : levels - 1;
  return std::max(mathieu::default_truncation(top, mathieu_q(params)),
                  costratified::default_truncation(params.hbar_beta2()));
}

double projector_expectation(unsigned n, const ModelParams& params, Stratum stratum) {
  const double q = mathieu_q(params);
  std::size_t trunc = std::max(mathieu::default_truncation(n, q),
                               costratified::default_truncation(params.hbar_beta2()));
  mathieu::MathieuSolution sol = mathieu::solve(n, q, trunc);
  while (sol.truncation_warning) sol = mathieu::solve(n, q, trunc *= 2);
  const double overlap = stratum_overlap(sol, params.hbar_beta2(), stratum);
  return overlap * overlap;
}

ProjectorTable projector_expectations(const ModelParams& params, unsigned levels,
                                      const OverlapFormula& overlap, std::size_t min_trunc) {
  const auto solutions = mathieu::solve_levels(levels, mathieu_q(params),
                                               std::max(joint_truncation(params, levels), min_trunc));
  ProjectorTable table;
  table.trunc = solutions.empty() ? 0 : solutions.front().trunc;
  table.plus.reserve(levels);
  table.minus.reserve(levels);
  for (const auto& sol : solutions) {
    const double plus = overlap(sol, params.hbar_beta2(), Stratum::Plus);
    const double minus = overlap(sol, params.hbar_beta2(), Stratum::Minus);
    table.plus.push_back(plus * plus);
    table.minus.push_back(minus * minus);
  }
  return table;
}

}  // namespace plaquette::spectrum
