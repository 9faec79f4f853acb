#pragma once

// Energy spectrum of H = -(hbar^2/2) Laplace + (nu/2)(3 - chi_1) and the
// expectation values of the stratum projectors in its eigenstates.
//
// Two independent routes lead to the spectrum:
//  * the Mathieu route, E_n = (hbar^2 beta^2 / 2)(b_{2n+2}(4 nu~)/4 + 3 nu~ - 1),
//    with eigenstates <k|xi_n> = (-1)^(n+k) B^{2n+2}_{2k+2}(4 nu~);
//  * the matrix of H in the basis |k>, tridiagonal because
//    chi_1 chi_k = chi_(k+1) + chi_(k-1), diagonalized densely.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "plaquette/costratified.hpp"
#include "plaquette/mathieu.hpp"
#include "plaquette/params.hpp"

namespace plaquette::spectrum {

using costratified::StateVector;
using costratified::Stratum;

struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  ///< off[k] = H_(k,k+1) = H_(k+1,k)

  std::size_t dim() const { return diag.size(); }
  Eigen::MatrixXd dense() const;
};

/// H_kk = (hbar^2 beta^2/2) k(k+2) + 3 nu/2, H_(k,k+1) = -nu/2. dim >= 2.
SymTridiagonal hamiltonian_matrix(const ModelParams& params, std::size_t dim);

/// All eigenvalues (ascending) of hamiltonian_matrix(params, dim), computed by
/// a dense self-adjoint eigensolver. Used as the independent spectral oracle.
std::vector<double> hamiltonian_eigenvalues(const ModelParams& params, std::size_t dim);

/// Mathieu parameter q = 4 nu~.
inline double mathieu_q(const ModelParams& params) { return 4.0 * params.nu_tilde(); }

/// E_n from a characteristic value b_{2n+2}(4 nu~).
double energy_from_characteristic(double b, const ModelParams& params);

/// E_n via the Mathieu route.
double energy(unsigned n, const ModelParams& params);

struct SpectralResult {
  unsigned n = 0;
  double energy = 0.0;
  StateVector xi;
  ModelParams params;
};

/// xi_n with <k|xi_n> = (-1)^(n+k) B_{2k+2}. trunc defaults to the Mathieu
/// default truncation (grown until the coefficient tail is below 1e-12).
SpectralResult eigenstate(unsigned n, const ModelParams& params,
                          std::optional<std::size_t> trunc = std::nullopt);

/// Coefficients <k|xi_n> from a Mathieu solution for level n.
StateVector eigenstate_from_solution(const mathieu::MathieuSolution& sol, const ModelParams& params);

/// xi_n(x) = (-1)^(n+1) sqrt(2) se_{2n+2}((x - pi)/2; 4 nu~), x in [0, pi].
double eigenfunction_x(unsigned n, const ModelParams& params, double x);
double eigenfunction_x(const mathieu::MathieuSolution& sol, double x);

/// <xi_n | psi_+-> summed directly from the Fourier coefficients:
///   <xi_n|psi_+> = ((-1)^n / N) sum_k (-1)^k (k+1) e^{-t(k+1)^2/2} B_{2k+2},
///   <xi_n|psi_-> = ((-1)^n / N) sum_k        (k+1) e^{-t(k+1)^2/2} B_{2k+2}.
/// Throws TruncationError if either factor's tail exceeds 1e-12 at the last
/// retained index.
double stratum_overlap(const mathieu::MathieuSolution& sol, double hbar_beta2, Stratum stratum);

/// P_(+-,n) = |<xi_n|psi_+->|^2.
double projector_expectation(unsigned n, const ModelParams& params, Stratum stratum);

/// The overlap formula used by projector sweeps; replaceable so verification
/// suites can be exercised against deliberately broken variants.
using OverlapFormula = std::function<double(const mathieu::MathieuSolution&, double, Stratum)>;

struct ProjectorTable {
  std::vector<double> plus;   ///< P_(+,n), n = 0 .. levels-1
  std::vector<double> minus;  ///< P_(-,n)
  std::size_t trunc = 0;
};

/// P_(+-,n) for n < levels from one shared truncation (at least min_trunc).
ProjectorTable projector_expectations(const ModelParams& params, unsigned levels,
                                      const OverlapFormula& overlap = stratum_overlap,
                                      std::size_t min_trunc = 0);

/// Truncation shared by all levels n < levels: large enough for both the
/// Mathieu tails and psi_+-.
std::size_t joint_truncation(const ModelParams& params, unsigned levels);

}  // namespace plaquette::spectrum
