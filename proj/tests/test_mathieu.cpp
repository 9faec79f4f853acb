#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "oracles/shooting.hpp"
#include "plaquette/errors.hpp"
#include "plaquette/mathieu.hpp"
#include "plaquette/quadrature.hpp"

namespace plaquette::mathieu {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(MathieuSolve, FreeCase) {
  const auto s0 = solve(0, 0.0, 16);
  EXPECT_EQ(s0.b, 4.0);
  EXPECT_EQ(s0.coeffs[0], 1.0);
  for (std::size_t k = 1; k < s0.coeffs.size(); ++k) EXPECT_EQ(s0.coeffs[k], 0.0);
  EXPECT_EQ(solve(3, 0.0, 19).b, 64.0);
  for (unsigned n = 0; n < 10; ++n) {
    const auto s = solve(n, 0.0);
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) EXPECT_EQ(s.coeffs[k], k == n ? 1.0 : 0.0);
  }
}

TEST(MathieuSolve, MatchesShootingOracle) {
  for (double q : {1.0, 4.0, 16.0, 48.0, 96.0}) {
    const testing::MathieuShooting oracle(q);
    for (unsigned n = 0; n < 6; ++n) {
      const double b = solve(n, q).b;
      EXPECT_NEAR(b, oracle.characteristic(n), 1e-8 * std::abs(b)) << "n=" << n << " q=" << q;
    }
  }
}

// Frozen values from an independent library implementation of b_m(q).
TEST(MathieuSolve, ReferenceCharacteristicValues) {
  EXPECT_NEAR(solve(0, 4.0).b, 2.746881027192658, 1e-9);
  EXPECT_NEAR(solve(1, 48.0).b, -5.757621374290929, 1e-9);
  EXPECT_NEAR(solve(3, 96.0).b, 69.94019145315546, 1e-9);
}

TEST(MathieuSolve, NormalizedAndRecurrenceResidualSmall) {
  for (double q : {1.0, 4.0, 16.0, 48.0, 96.0}) {
    for (unsigned n = 0; n < 10; ++n) {
      const auto s = solve(n, q);
      double norm2 = 0.0;
      for (double c : s.coeffs) norm2 += c * c;
      EXPECT_NEAR(norm2, 1.0, 1e-12);
      EXPECT_LT(recurrence_residual(s.coeffs, s.b, q), 1e-10);
      EXPECT_FALSE(s.truncation_warning);
    }
  }
}

TEST(MathieuSolve, CharacteristicValuesStrictlyIncrease) {
  for (double q : {0.0, 1.0, 4.0, 16.0, 48.0, 96.0}) {
    const auto levels = solve_levels(10, q);
    for (std::size_t n = 1; n < levels.size(); ++n) EXPECT_LT(levels[n - 1].b, levels[n].b) << "q=" << q;
  }
}

TEST(MathieuSolve, ContinuousInQ) {
  for (unsigned n = 0; n < 12; ++n) {
    auto prev = solve(n, 0.0, 80);
    for (double q = 0.5; q <= 120.0; q += 0.5) {
      const auto cur = solve(n, q, 80);
      double ip = 0.0;
      for (std::size_t k = 0; k < 80; ++k) ip += prev.coeffs[k] * cur.coeffs[k];
      ASSERT_GT(ip, 0.0) << "n=" << n << " q=" << q;
      prev = cur;
    }
  }
}

TEST(MathieuSolve, NegativeQMirrorsPositive) {
  // se_{2n+2}(y; -q) = (-1)^n se_{2n+2}(pi/2 - y; q): same b, coefficients (-1)^k up to sign.
  for (unsigned n = 0; n < 5; ++n) {
    const auto pos = solve(n, 10.0, 40);
    const auto neg = solve(n, -10.0, 40);
    EXPECT_NEAR(pos.b, neg.b, 1e-10);
    double ip = 0.0;
    for (std::size_t k = 0; k < 40; ++k) ip += pos.coeffs[k] * neg.coeffs[k] * (k % 2 ? -1.0 : 1.0);
    EXPECT_NEAR(std::abs(ip), 1.0, 1e-12);
  }
}

TEST(MathieuSolve, Preconditions) {
  EXPECT_THROW(solve(5, 1.0, 20), std::invalid_argument);
  EXPECT_THROW(solve(0, std::nan(""), 20), std::invalid_argument);
}

TEST(MathieuSolve, TruncationWarningAndDefaultDoubling) {
  // A truncation far too short for q = 400 leaves a visible tail.
  const auto cramped = solve(0, 400.0, 16);
  EXPECT_TRUE(cramped.truncation_warning);
  const auto fine = solve(0, 400.0);
  EXPECT_FALSE(fine.truncation_warning);
  EXPECT_LE(std::abs(fine.tail()), kTailTolerance);
  EXPECT_EQ(default_truncation(0, 400.0), 56u);
  EXPECT_EQ(default_truncation(50, 1.0), 66u);
}

TEST(Se, FreeCaseIsSine) {
  for (double y : {-1.2, -0.3, 0.7}) EXPECT_NEAR(se(0, 0.0, y), std::sin(2.0 * y), 1e-15);
}

TEST(Se, BoundaryConditions) {
  for (double q : {1.0, 4.0, 16.0}) {
    for (unsigned n = 0; n <= 8; ++n) {
      const auto s = solve(n, q);
      EXPECT_NEAR(se(s, 0.0), 0.0, 1e-10);
      EXPECT_NEAR(se(s, -kPi / 2), 0.0, 1e-10);
    }
  }
}

TEST(Se, SatisfiesMathieuEquation) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ys(-kPi / 2, 0.0);
  for (double q : {1.0, 16.0, 96.0}) {
    for (unsigned n = 0; n < 6; ++n) {
      const auto s = solve(n, q);
      for (int i = 0; i < 50; ++i) {
        const double y = ys(rng);
        const double residual = se_second(s, y) + (s.b - 2.0 * q * std::cos(2.0 * y)) * se(s, y);
        EXPECT_LT(std::abs(residual), 1e-7) << "n=" << n << " q=" << q << " y=" << y;
      }
    }
  }
}

TEST(Se, OrthonormalOnQuarterPeriod) {
  // sqrt(2) se_{2n+2} is orthonormal for (2/pi) dy on [-pi/2, 0].
  const GaussLegendre rule(256, -kPi / 2, 0.0);
  const auto levels = solve_levels(8, 24.0);
  for (unsigned m = 0; m < 8; ++m) {
    for (unsigned n = 0; n < 8; ++n) {
      const double g = rule.integrate([&](double y) { return 2.0 * se(levels[m], y) * se(levels[n], y); }) *
                       2.0 / kPi;
      EXPECT_NEAR(g, m == n ? 1.0 : 0.0, 1e-9);
    }
  }
}

TEST(RecurrenceFit, ExactForMathieuVectorsAndLargeOtherwise) {
  const auto s = solve(2, 7.5);
  EXPECT_LT(recurrence_fit_residual(s.coeffs), 1e-12);
  std::vector<double> gaussian(40);
  for (std::size_t k = 0; k < gaussian.size(); ++k) {
    const double m = k + 1.0;
    gaussian[k] = m * std::exp(-m * m / 16.0);
  }
  EXPECT_GT(recurrence_fit_residual(gaussian), 1e-3);
}

TEST(SolutionCacheTest, ConcurrentReaders) {
  SolutionCache cache;
  std::vector<std::thread> workers;
  std::vector<double> results(8);
  for (int w = 0; w < 8; ++w) {
    workers.emplace_back([&, w] {
      for (unsigned n = 0; n < 6; ++n) results[w] += cache.get(n, 12.0, 40).b;
    });
  }
  for (auto& t : workers) t.join();
  for (double r : results) EXPECT_EQ(r, results[0]);
  EXPECT_EQ(cache.size(), 6u);
  EXPECT_EQ(cache.get(0, 12.0, 40).b, solve(0, 12.0, 40).b);
}

}  // namespace
}  // namespace plaquette::mathieu
