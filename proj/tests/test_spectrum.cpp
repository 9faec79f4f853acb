#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "plaquette/characters.hpp"
#include "plaquette/costratified.hpp"
#include "plaquette/spectrum.hpp"

namespace plaquette::spectrum {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(HamiltonianMatrix, SmallInstance) {
  // hbar^2 beta^2 = 2, nu = 2: hbar = 1, beta2 = 2, nu~ = 1.
  const auto p = ModelParams::from_nu_tilde(1.0, 2.0, 1.0);
  const auto h = hamiltonian_matrix(p, 2).dense();
  EXPECT_DOUBLE_EQ(h(0, 0), 3.0);
  EXPECT_DOUBLE_EQ(h(0, 1), -1.0);
  EXPECT_DOUBLE_EQ(h(1, 0), -1.0);
  EXPECT_DOUBLE_EQ(h(1, 1), 6.0);
  EXPECT_THROW(hamiltonian_matrix(p, 1), std::invalid_argument);
}

TEST(HamiltonianMatrix, FreeDiagonalAndSymmetric) {
  const auto p = ModelParams::from_nu_tilde(0.7, 1.3, 0.0);
  const auto h = hamiltonian_matrix(p, 12).dense();
  for (int k = 0; k < 12; ++k) {
    EXPECT_DOUBLE_EQ(h(k, k), 0.5 * p.hbar() * p.hbar() * characters::laplace_eigenvalue(k, p));
  }
  const auto g = hamiltonian_matrix(ModelParams::reduced(0.3, 5.0), 20).dense();
  EXPECT_EQ(g, g.transpose());
}

TEST(Energy, FreeTheory) {
  const auto p = ModelParams::from_nu_tilde(0.9, 0.6, 0.0);
  for (unsigned n = 0; n < 10; ++n) {
    EXPECT_NEAR(energy(n, p) / p.energy_unit(), n * (n + 2.0) / 2.0, 1e-12);
  }
}

TEST(Energy, MatchesHamiltonianEigenvalues) {
  for (double t : {0.5, 0.125, 1.0 / 32}) {
    for (double nu : {0.0, 3.0, 6.0, 12.0, 24.0}) {
      const auto p = ModelParams::reduced(t, nu);
      const auto oracle = hamiltonian_eigenvalues(p, 80);
      for (unsigned n = 0; n < 10; ++n) {
        const double e = energy(n, p);
        EXPECT_NEAR(e, oracle[n], 1e-8 * std::max(std::abs(e), p.energy_unit())) << n << " " << nu;
      }
    }
  }
}

TEST(Energy, StrictlyIncreasing) {
  for (double nu : {0.0, 3.0, 6.0, 12.0, 24.0}) {
    const auto p = ModelParams::reduced(0.125, nu);
    for (unsigned n = 1; n < 12; ++n) EXPECT_LT(energy(n - 1, p), energy(n, p));
  }
}

TEST(Eigenstate, FreeCaseIsBasisVector) {
  const auto p = ModelParams::reduced(0.5, 0.0);
  const auto r = eigenstate(2, p);
  for (std::size_t k = 0; k < r.xi.trunc(); ++k) EXPECT_EQ(r.xi[k], k == 2 ? 1.0 : 0.0);
}

TEST(Eigenstate, OrthonormalAndEigen) {
  const auto p = ModelParams::reduced(0.125, 6.0);
  const std::size_t trunc = 40;
  std::vector<SpectralResult> xs;
  for (unsigned n = 0; n < 8; ++n) xs.push_back(eigenstate(n, p, trunc));
  const Eigen::MatrixXd h = hamiltonian_matrix(p, trunc).dense();
  for (unsigned m = 0; m < 8; ++m) {
    for (unsigned n = 0; n < 8; ++n) {
      EXPECT_NEAR(costratified::inner(xs[m].xi, xs[n].xi).real(), m == n ? 1.0 : 0.0, 1e-9);
    }
    Eigen::VectorXd v(trunc);
    for (std::size_t k = 0; k < trunc; ++k) v(static_cast<Eigen::Index>(k)) = xs[m].xi[k].real();
    EXPECT_LT((h * v - xs[m].energy * v).norm(), 1e-7);
  }
}

TEST(EigenfunctionX, FreeCaseAndBoundaryValues) {
  const auto free = ModelParams::reduced(0.5, 0.0);
  for (unsigned n = 0; n < 5; ++n) {
    for (double x : {0.3, 1.1, 2.9}) {
      EXPECT_NEAR(eigenfunction_x(n, free, x), std::numbers::sqrt2 * std::sin((n + 1) * x), 1e-14);
    }
  }
  const auto p = ModelParams::reduced(0.5, 12.0);
  for (unsigned n = 0; n < 6; ++n) {
    EXPECT_NEAR(eigenfunction_x(n, p, 0.0), 0.0, 1e-10);
    EXPECT_NEAR(eigenfunction_x(n, p, kPi), 0.0, 1e-10);
  }
}

TEST(EigenfunctionX, AgreesWithBasisExpansion) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> xs(0.0, kPi);
  std::uniform_int_distribution<unsigned> ns(0, 5);
  const auto p = ModelParams::reduced(0.25, 12.0);
  for (int i = 0; i < 50; ++i) {
    const unsigned n = ns(rng);
    const double x = xs(rng);
    const auto xi = eigenstate(n, p).xi;
    EXPECT_NEAR(eigenfunction_x(n, p, x), xi.value_at(x).real(), 1e-9);
  }
}

TEST(EigenfunctionX, PositiveSlopeAtOrigin) {
  const auto p = ModelParams::reduced(0.5, 24.0);
  for (unsigned n = 0; n < 8; ++n) EXPECT_GT(eigenfunction_x(n, p, 1e-4), 0.0) << n;
}

TEST(ProjectorExpectation, FreeClosedForm) {
  for (double t : {0.5, 0.125, 1.0 / 32}) {
    const auto p = ModelParams::reduced(t, 0.0);
    const double n2 = costratified::normalization_squared(t);
    for (unsigned n = 0; n < 10; ++n) {
      const double m = n + 1.0;
      const double closed = m * m * std::exp(-t * m * m) / n2;
      EXPECT_NEAR(projector_expectation(n, p, Stratum::Plus), closed, 1e-10);
      EXPECT_NEAR(projector_expectation(n, p, Stratum::Minus), closed, 1e-10);
    }
  }
}

TEST(ProjectorExpectation, Completeness) {
  const auto p = ModelParams::reduced(0.125, 24.0);
  const auto table = projector_expectations(p, 60);
  double sum_plus = 0.0;
  double sum_minus = 0.0;
  for (unsigned n = 0; n < 60; ++n) {
    EXPECT_GE(table.plus[n], 0.0);
    EXPECT_LE(table.plus[n], 1.0);
    sum_plus += table.plus[n];
    sum_minus += table.minus[n];
  }
  EXPECT_GE(sum_plus, 1.0 - 1e-6);
  EXPECT_GE(sum_minus, 1.0 - 1e-6);
  EXPECT_NEAR(table.plus[3], projector_expectation(3, p, Stratum::Plus), 1e-12);
}

TEST(ProjectorExpectation, OverlapFormulaMatchesEigenstateInnerProduct) {
  const auto p = ModelParams::reduced(0.2, 7.0);
  const std::size_t trunc = joint_truncation(p, 6);
  const auto plus = costratified::psi_plus(p, trunc);
  const auto minus = costratified::psi_minus(p, trunc);
  for (unsigned n = 0; n < 6; ++n) {
    const auto sol = mathieu::solve(n, mathieu_q(p), trunc);
    const auto xi = eigenstate_from_solution(sol, p);
    EXPECT_NEAR(stratum_overlap(sol, 0.2, Stratum::Plus), costratified::inner(xi, plus).real(), 1e-13);
    EXPECT_NEAR(stratum_overlap(sol, 0.2, Stratum::Minus), costratified::inner(xi, minus).real(), 1e-13);
  }
}

TEST(ProjectorExpectation, ParameterCollapse) {
  // (hbar, beta2, nu) triples with identical hbar*beta2 = 1/8 and nu~ = 6,
  // chosen so every derived quantity is exact in binary floating point.
  const auto a = ModelParams::from_nu_tilde(1.0, 0.125, 6.0);
  const auto b = ModelParams::from_nu_tilde(0.5, 0.25, 6.0);
  const auto c = ModelParams::from_coupling(2.0, 0.0625, 2.0);  // nu = 1/4, nu~ = 1
  ASSERT_EQ(a.hbar_beta2(), b.hbar_beta2());
  ASSERT_EQ(a.nu_tilde(), b.nu_tilde());
  for (unsigned n = 0; n < 6; ++n) {
    EXPECT_EQ(projector_expectation(n, a, Stratum::Plus), projector_expectation(n, b, Stratum::Plus));
    EXPECT_EQ(projector_expectation(n, a, Stratum::Minus), projector_expectation(n, b, Stratum::Minus));
  }
  const auto d = ModelParams::from_coupling(0.5, 0.25, 4.0);  // nu = 1/16, nu~ = 1
  ASSERT_EQ(c.hbar_beta2(), d.hbar_beta2());
  ASSERT_EQ(c.nu_tilde(), d.nu_tilde());
  for (unsigned n = 0; n < 4; ++n) {
    EXPECT_EQ(projector_expectation(n, c, Stratum::Plus), projector_expectation(n, d, Stratum::Plus));
  }
}

TEST(ProjectorExpectation, ParityDistinguishesStrataOnlyWhenCoupled) {
  const auto free = ModelParams::reduced(0.125, 0.0);
  for (unsigned n = 0; n < 6; ++n) {
    EXPECT_NEAR(projector_expectation(n, free, Stratum::Plus), projector_expectation(n, free, Stratum::Minus),
                1e-14);
  }
  const auto coupled = ModelParams::reduced(0.125, 6.0);
  EXPECT_GT(std::abs(projector_expectation(0, coupled, Stratum::Plus) -
                     projector_expectation(0, coupled, Stratum::Minus)),
            1e-3);
}

TEST(ProjectorExpectation, StratumStateIsNotAMathieuVector) {
  for (double t : {0.5, 0.125, 1.0 / 32}) {
    const auto psi = costratified::psi_plus(ModelParams::reduced(t, 0.0));
    std::vector<double> c(psi.trunc());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = (k % 2 ? -1.0 : 1.0) * psi[k].real();
    EXPECT_GT(mathieu::recurrence_fit_residual(c), 1e-3) << "t=" << t;
  }
}

TEST(ProjectorExpectation, TailCheck) {
  const auto sol = mathieu::solve(0, 400.0, 16);
  EXPECT_THROW(stratum_overlap(sol, 0.5, Stratum::Plus), TruncationError);
}

}  // namespace
}  // namespace plaquette::spectrum
