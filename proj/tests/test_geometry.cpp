#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "oracles/partitions.hpp"
#include "plaquette/errors.hpp"
#include "plaquette/geometry.hpp"

namespace plaquette::geometry {
namespace {

PhasePoint semicone_point(double x, double y) { return {x, y, std::hypot(x, y)}; }
PhasePoint canoe_point(double X, double Y) { return {X, Y, canoe_tau(X, Y)}; }

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t vars, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  Polynomial p(vars);
  for (int i = 0; i < 5; ++i) {
    Exponents e(vars, 0);
    unsigned budget = deg(rng);
    for (std::size_t v = 0; v < vars && budget > 0; ++v) {
      std::uniform_int_distribution<unsigned> take(0, budget);
      e[v] = take(rng);
      budget -= e[v];
    }
    p.add_term(e, coef(rng));
  }
  return p;
}

Eigen::MatrixXd random_rotation(std::mt19937_64& rng, int s) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd a(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) a(i, j) = g(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

ParticleConfig random_config(std::mt19937_64& rng, int s, int l) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd q(s, l);
  Eigen::MatrixXd p(s, l);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < l; ++j) {
      q(i, j) = u(rng);
      p(i, j) = u(rng);
    }
  }
  return {q, p};
}

TEST(PolynomialTest, ArithmeticAndCanonicalForm) {
  const auto x = Polynomial::variable(2, 0);
  const auto y = Polynomial::variable(2, 1);
  const auto p = (x + y) * (x - y);
  EXPECT_EQ(p, x * x - y * y);
  EXPECT_EQ(p.terms().size(), 2u);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_EQ(p.derivative(0), 2.0 * x);
  const std::vector<double> pt{3.0, 1.0};
  EXPECT_DOUBLE_EQ(p.evaluate(pt), 8.0);
  const std::vector<std::string> names{"x", "y"};
  EXPECT_EQ(p.to_string(names), "x^2 - y^2");
  EXPECT_THROW(x + Polynomial::variable(3, 0), UnknownGeneratorError);
}

TEST(Bracket, SemiconeRelationIsCentral) {
  const auto t = semicone_table();
  const auto rel = t.relations().front();
  for (const auto& g : t.generators()) EXPECT_TRUE(bracket(t, t.generator(g), rel).is_zero()) << g;
}

TEST(Bracket, CanoeGeneratorBrackets) {
  const auto t = canoe_table();
  const auto X = t.generator("X");
  const auto Y = t.generator("Y");
  const auto tau = t.generator("tau");
  const auto one = Polynomial::constant(3, 1.0);
  EXPECT_EQ(bracket(t, X, Y), X * X + Y * Y + 4.0 * (2.0 * tau - one));
  EXPECT_EQ(bracket(t, X, tau), 2.0 * (one - tau) * Y);
  EXPECT_EQ(bracket(t, Y, tau), 2.0 * tau * X);
  EXPECT_EQ(bracket(t, tau, Y), -2.0 * tau * X);
}

TEST(Bracket, AntisymmetricOnRandomPolynomials) {
  std::mt19937_64 rng(41);
  for (const auto& t : {semicone_table(), canoe_table()}) {
    for (int i = 0; i < 30; ++i) {
      const auto f = random_polynomial(rng, 3, 3);
      const auto g = random_polynomial(rng, 3, 3);
      const auto fg = bracket(t, f, g);
      const auto gf = bracket(t, g, f);
      const std::vector<double> pt{0.3, -1.2, 0.7};
      EXPECT_NEAR((fg + gf).evaluate(pt), 0.0, 1e-9);
    }
  }
}

TEST(Bracket, UnknownGenerators) {
  const auto t = semicone_table();
  EXPECT_THROW(bracket(t, Polynomial::variable(2, 0), t.generator("x")), UnknownGeneratorError);
  EXPECT_THROW(t.generator("tau"), UnknownGeneratorError);
}

TEST(Jacobi, SemiconeAndCanoeOnVariety) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  const auto sc = semicone_table();
  const auto ca = canoe_table();
  for (int i = 0; i < 100; ++i) {
    const auto sp = semicone_point(u(rng), u(rng));
    EXPECT_LT(jacobi_residual(sc, sc.generator("x"), sc.generator("y"), sc.generator("r"), sp), 1e-9);
    const auto cp = canoe_point(u(rng), u(rng));
    EXPECT_LT(jacobi_residual(ca, ca.generator("X"), ca.generator("Y"), ca.generator("tau"), cp), 1e-9);
  }
}

TEST(Jacobi, RandomPolynomialsOnCanoe) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const auto ca = canoe_table();
  for (int i = 0; i < 20; ++i) {
    const auto f = random_polynomial(rng, 3, 2);
    const auto g = random_polynomial(rng, 3, 2);
    const auto h = random_polynomial(rng, 3, 2);
    const auto pt = canoe_point(u(rng), u(rng));
    EXPECT_LT(jacobi_residual(ca, f, g, h, pt), 1e-8);
  }
}

TEST(Jacobi, RepeatedArgumentVanishesExactly) {
  const auto ca = canoe_table();
  const auto f = ca.generator("X") * ca.generator("tau");
  EXPECT_EQ(jacobi_residual(ca, f, f, f, canoe_point(0.4, 1.7)), 0.0);
}

TEST(Jacobi, OffVarietyRejected) {
  const auto sc = semicone_table();
  const PhasePoint bad{1.0, 1.0, 5.0};
  EXPECT_THROW(jacobi_residual(sc, sc.generator("x"), sc.generator("y"), sc.generator("r"), bad),
               OffVarietyError);
  EXPECT_THROW(relation_casimir_residual(canoe_table(), "X", PhasePoint{1.0, 2.0, 3.0}), OffVarietyError);
}

TEST(Casimir, RelationIdealIsPoisson) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  const auto sc = semicone_table();
  const auto ca = canoe_table();
  for (int i = 0; i < 100; ++i) {
    const auto sp = semicone_point(u(rng), u(rng));
    const auto cp = canoe_point(u(rng), u(rng));
    for (const auto& g : sc.generators()) EXPECT_EQ(relation_casimir_residual(sc, g, sp), 0.0);
    for (const auto& g : ca.generators()) EXPECT_LT(relation_casimir_residual(ca, g, cp), 1e-9) << g;
  }
}

TEST(CanoeTensor, VanishesOnlyAtVertices) {
  const auto ca = canoe_table();
  for (double X : {2.0, -2.0}) {
    const PhasePoint vertex{X, 0.0, 0.0};
    for (double v : ca.tensor_at(vertex)) EXPECT_EQ(v, 0.0);
    EXPECT_EQ(tensor_rank(ca, vertex), 0u);
  }
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(tensor_rank(ca, canoe_point(u(rng), u(rng))), 2u);
}

TEST(CanoeTau, ValuesAndRelation) {
  EXPECT_EQ(canoe_tau(2.0, 0.0), 0.0);
  EXPECT_EQ(canoe_tau(-2.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(canoe_tau(0.0, 0.0), 1.0);
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 50; ++j) {
      const double X = -3.0 + 6.0 * i / 49.0;
      const double Y = -3.0 + 6.0 * j / 49.0;
      const double tau = canoe_tau(X, Y);
      EXPECT_GE(tau, 0.0);
      EXPECT_LT(canoe_relation_residual(X, Y, tau), 1e-12) << X << "," << Y;
    }
  }
}

TEST(CanoeTau, ImageOfTorusCoordinates) {
  // tau = y^2/r^2 for Z = z + 1/z, z = x + iy.
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const std::complex<double> z(u(rng), u(rng));
    const auto Z = reduce_point(z);
    EXPECT_NEAR(canoe_tau(Z.real(), Z.imag()), z.imag() * z.imag() / std::norm(z), 1e-10);
  }
}

TEST(Strata, ClassifyAndReduce) {
  EXPECT_EQ(classify_stratum(2.0), Stratum::Plus);
  EXPECT_EQ(classify_stratum(-2.0), Stratum::Minus);
  EXPECT_EQ(classify_stratum({0.0, 1.0}), Stratum::Top);
  EXPECT_EQ(reduce_point(1.0), std::complex<double>(2.0));
  EXPECT_EQ(reduce_point(-1.0), std::complex<double>(-2.0));
  EXPECT_EQ(classify_stratum(reduce_point(1.0)), Stratum::Plus);
  EXPECT_THROW(reduce_point(0.0), DomainError);
}

TEST(Strata, WeylInvariance) {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const std::complex<double> z(u(rng), u(rng));
    EXPECT_LT(std::abs(reduce_point(z) - reduce_point(1.0 / z)), 1e-14 * std::max(1.0, std::abs(reduce_point(z))));
  }
}

TEST(MomentumO, Examples) {
  Eigen::MatrixXd q(2, 1);
  Eigen::MatrixXd p(2, 1);
  q << 1, 0;
  p << 0, 1;
  Eigen::Matrix2d expected;
  expected << 0, 1, -1, 0;
  EXPECT_EQ(momentum_O({q, p}), Eigen::MatrixXd(expected));

  Eigen::MatrixXd qc(3, 2);
  qc << 1, 2, -1, 0.5, 3, 1;
  EXPECT_LT(momentum_O({qc, 2.5 * qc}).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(MomentumO, AntisymmetricAndEquivariant) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 50; ++i) {
    const auto cfg = random_config(rng, 3, 4);
    const auto m = momentum_O(cfg);
    EXPECT_EQ(m, Eigen::MatrixXd(-m.transpose()));
    const auto r = random_rotation(rng, 3);
    const auto rotated = momentum_O({r * cfg.q, r * cfg.p});
    EXPECT_LT((rotated - r * m * r.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(MomentumSp, Examples) {
  EXPECT_EQ(momentum_Sp(ParticleConfig::zero(3, 2)).cwiseAbs().maxCoeff(), 0.0);
  Eigen::MatrixXd q(1, 1);
  Eigen::MatrixXd p(1, 1);
  q << 1.5;
  p << -2.0;
  Eigen::Matrix2d expected;
  expected << -3.0, -2.25, 4.0, 3.0;
  EXPECT_EQ(momentum_Sp({q, p}), Eigen::MatrixXd(expected));
}

TEST(MomentumSp, LiesInSymplecticAlgebra) {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 100; ++i) {
    EXPECT_LT(sp_membership_residual(momentum_Sp(random_config(rng, 1 + i % 3, 1 + i % 4))), 1e-12);
  }
  EXPECT_THROW(sp_membership_residual(Eigen::MatrixXd::Zero(3, 3)), std::invalid_argument);
}

TEST(SymmetricProjectionTest, RankBounds) {
  std::mt19937_64 rng(79);
  for (int s = 1; s <= 3; ++s) {
    for (int l = 1; l <= 3; ++l) {
      for (int i = 0; i < 100; ++i) {
        const auto proj = symmetric_projection(random_config(rng, s, l));
        EXPECT_LE(proj.rank, static_cast<std::size_t>(std::min(s, l)));
        EXPECT_LT((proj.matrix - proj.matrix.transpose()).cwiseAbs().maxCoeff(), 1e-15);
      }
    }
  }
  EXPECT_EQ(symmetric_projection(random_config(rng, 2, 3)).rank, 2u);
  EXPECT_EQ(symmetric_projection(ParticleConfig::zero(2, 2)).rank, 0u);
}

TEST(SymmetricProjectionTest, OrthogonalInvariance) {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 50; ++i) {
    const auto cfg = random_config(rng, 3, 2);
    const auto r = random_rotation(rng, 3);
    const auto a = symmetric_projection(cfg).matrix;
    const auto b = symmetric_projection({r * cfg.q, r * cfg.p}).matrix;
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Monomials, Examples) {
  EXPECT_EQ(monomial_decomposition(1, 5), (std::vector<MonomialExponents>{{5}}));
  EXPECT_EQ(monomial_decomposition(2, 2), (std::vector<MonomialExponents>{{2, 0}, {0, 1}}));
  EXPECT_EQ(monomial_decomposition(5, 5).size(), 7u);
  EXPECT_EQ(monomial_decomposition(3, 0), (std::vector<MonomialExponents>{{0, 0, 0}}));
  EXPECT_THROW(monomial_decomposition(0, 1), std::invalid_argument);
  EXPECT_EQ(monomial_label({2, 0, 1}), "d1^2 d3");
  EXPECT_EQ(monomial_label({0, 0}), "1");
}

TEST(Monomials, CountsMatchBruteForcePartitions) {
  for (unsigned s = 1; s <= 6; ++s) {
    for (unsigned k = 0; k <= 20; ++k) {
      const auto list = monomial_decomposition(s, k);
      EXPECT_EQ(list.size(), testing::brute_force_partitions(k, s)) << s << "," << k;
      for (const auto& e : list) {
        unsigned weight = 0;
        for (std::size_t m = 0; m < e.size(); ++m) weight += (m + 1) * e[m];
        EXPECT_EQ(weight, k);
      }
      EXPECT_TRUE(std::is_sorted(list.rbegin(), list.rend()));
    }
  }
}

TEST(Monomials, RestrictionSplit) {
  const auto split = restriction_kernel(2, 2);
  EXPECT_EQ(split.kernel, (std::vector<MonomialExponents>{{0, 1}}));
  EXPECT_EQ(split.image, (std::vector<MonomialExponents>{{2, 0}}));
  for (unsigned s = 2; s <= 6; ++s) {
    for (unsigned k = 0; k <= 20; ++k) {
      const auto r = restriction_kernel(s, k);
      EXPECT_EQ(r.kernel.size() + r.image.size(), monomial_decomposition(s, k).size());
      EXPECT_EQ(r.image.size(), monomial_decomposition(s - 1, k).size());
      for (const auto& e : r.kernel) EXPECT_GE(e.back(), 1u);
      for (const auto& e : r.image) EXPECT_EQ(e.back(), 0u);
    }
  }
  EXPECT_THROW(restriction_kernel(1, 3), std::invalid_argument);
}

}  // namespace
}  // namespace plaquette::geometry
