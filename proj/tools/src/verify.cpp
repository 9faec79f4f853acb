#include "plaquette/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "plaquette/characters.hpp"
#include "plaquette/cli/settings.hpp"
#include "plaquette/costratified.hpp"
#include "plaquette/geometry.hpp"
#include "plaquette/mathieu.hpp"
#include "plaquette/quadrature.hpp"
#include "plaquette/theta.hpp"

namespace plaquette::cli {
namespace {

constexpr double kPi = std::numbers::pi;

CheckResult below(std::string name, double residual, double tolerance) {
  return {std::move(name), residual, tolerance, residual < tolerance};
}

CheckResult exact(std::string name, double residual) { return {std::move(name), residual, 0.0, residual == 0.0}; }

// partitions of k into parts <= s by the usual coin-change table
std::size_t partition_count(unsigned k, unsigned s) {
  std::vector<std::size_t> ways(k + 1, 0);
  ways[0] = 1;
  for (unsigned part = 1; part <= s; ++part)
    for (unsigned v = part; v <= k; ++v) ways[v] += ways[v - part];
  return ways[k];
}

std::vector<double> log_grid(double a, double b, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(std::exp(std::log(a) + (std::log(b) - std::log(a)) * i / (count - 1)));
  return out;
}

}  // namespace

std::vector<CheckResult> geometry_checks() {
  using namespace geometry;
  std::vector<CheckResult> out;
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(-10.0, 10.0);

  const auto sc = semicone_table();
  const auto ca = canoe_table();
  double sc_jac = 0.0, sc_cas = 0.0, ca_jac = 0.0, ca_cas = 0.0;
  double rank_violations = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng), y = u(rng);
    const PhasePoint sp{x, y, std::hypot(x, y)};
    sc_jac = std::max(sc_jac, jacobi_residual(sc, sc.generator("x"), sc.generator("y"), sc.generator("r"), sp));
    for (const auto& g : sc.generators()) sc_cas = std::max(sc_cas, relation_casimir_residual(sc, g, sp));

    const double X = u(rng), Y = u(rng);
    const PhasePoint cp{X, Y, canoe_tau(X, Y)};
    ca_jac = std::max(ca_jac, jacobi_residual(ca, ca.generator("X"), ca.generator("Y"), ca.generator("tau"), cp));
    for (const auto& g : ca.generators()) ca_cas = std::max(ca_cas, relation_casimir_residual(ca, g, cp));
    if (tensor_rank(ca, cp) != 2) rank_violations += 1.0;
  }
  out.push_back(below("geometry.semicone.jacobi", sc_jac, 1e-9));
  out.push_back(below("geometry.semicone.poisson_ideal", sc_cas, 1e-9));
  out.push_back(below("geometry.canoe.jacobi", ca_jac, 1e-9));
  out.push_back(below("geometry.canoe.poisson_ideal", ca_cas, 1e-9));

  double vertex = 0.0;
  for (double X : {2.0, -2.0}) {
    for (double v : ca.tensor_at(PhasePoint{X, 0.0, 0.0})) vertex = std::max(vertex, std::abs(v));
  }
  out.push_back(exact("geometry.canoe.tensor_zero_at_vertices", vertex));
  out.push_back(exact("geometry.canoe.tensor_rank2_off_vertices", rank_violations));

  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto config = [&](int s, int l) {
    Eigen::MatrixXd q(s, l), p(s, l);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < l; ++j) q(i, j) = unit(rng), p(i, j) = unit(rng);
    return ParticleConfig{q, p};
  };
  double sp_res = 0.0, antisym = 0.0, proj_violations = 0.0;
  for (int s = 1; s <= 3; ++s) {
    for (int l = 1; l <= 3; ++l) {
      for (int i = 0; i < 112; ++i) {  // 9 * 112 >= 1000 configurations
        const auto cfg = config(s, l);
        sp_res = std::max(sp_res, sp_membership_residual(momentum_Sp(cfg)));
        const auto m = momentum_O(cfg);
        antisym = std::max(antisym, (m + m.transpose()).cwiseAbs().maxCoeff());
        if (symmetric_projection(cfg).rank > static_cast<std::size_t>(std::min(s, l))) proj_violations += 1.0;
      }
    }
  }
  out.push_back(below("geometry.momentum_O.antisymmetry", antisym, 1e-12));
  out.push_back(below("geometry.momentum_Sp.sp_membership", sp_res, 1e-12));
  out.push_back(exact("geometry.symmetric_projection.rank_bound", proj_violations));

  double count_mismatch = 0.0, split_mismatch = 0.0;
  for (unsigned s = 1; s <= 6; ++s) {
    for (unsigned k = 0; k <= 20; ++k) {
      const auto list = monomial_decomposition(s, k);
      if (list.size() != partition_count(k, s)) count_mismatch += 1.0;
      if (s >= 2) {
        const auto split = restriction_kernel(s, k);
        if (split.image.size() != monomial_decomposition(s - 1, k).size() ||
            split.image.size() + split.kernel.size() != list.size()) {
          split_mismatch += 1.0;
        }
      }
    }
  }
  out.push_back(exact("geometry.decomposition.partition_counts", count_mismatch));
  out.push_back(exact("geometry.decomposition.kernel_image_split", split_mismatch));
  return out;
}

std::vector<CheckResult> spectral_checks(const spectrum::OverlapFormula& overlap) {
  std::vector<CheckResult> out;
  const std::vector<double> ts{0.5, 0.125, 0.03125};

  double free_dev = 0.0;
  double free_vec = 0.0;
  for (unsigned n = 0; n < 10; ++n) {
    const auto p = ModelParams::reduced(0.5, 0.0);
    free_dev = std::max(free_dev, std::abs(spectrum::energy(n, p) / p.energy_unit() - n * (n + 2.0) / 2.0));
    const auto xi = spectrum::eigenstate(n, p).xi;
    for (std::size_t k = 0; k < xi.trunc(); ++k) free_vec = std::max(free_vec, std::abs(xi[k] - (k == n ? 1.0 : 0.0)));
  }
  out.push_back(below("spectrum.free_energy_anchor", free_dev, 1e-12));
  out.push_back(exact("spectrum.free_eigenvectors", free_vec));

  double dual = 0.0;
  for (double t : ts) {
    for (double nu : {3.0, 6.0, 12.0, 24.0}) {
      const auto p = ModelParams::reduced(t, nu);
      const auto oracle = spectrum::hamiltonian_eigenvalues(p, 96);
      const auto levels = mathieu::solve_levels(10, spectrum::mathieu_q(p));
      for (unsigned n = 0; n < 10; ++n) {
        const double e = spectrum::energy_from_characteristic(levels[n].b, p);
        dual = std::max(dual, std::abs(e - oracle[n]) / std::abs(oracle[n]));
      }
    }
  }
  out.push_back(below("spectrum.mathieu_vs_hamiltonian", dual, 1e-8));

  double norm_dev = 0.0, tunnel_dev = 0.0;
  for (double t : log_grid(0.01, 5.0, 200)) {
    double series = 0.0;
    for (int n = 1; n < 100000; ++n) {
      const double term = n * static_cast<double>(n) * std::exp(-t * n * n);
      series += term;
      if (n > 4 && term < 1e-18 * series) break;
    }
    const double theta_form = 0.5 * std::exp(-t) * theta::theta3_prime(std::exp(-t));
    norm_dev = std::max(norm_dev, std::abs(series - theta_form) / theta_form);
    const auto forms = costratified::tunneling_overlap_forms(t);
    tunnel_dev = std::max(tunnel_dev, std::abs(forms.series - forms.theta));
  }
  out.push_back(below("costratified.normalization_series_vs_theta", norm_dev, 1e-10));
  out.push_back(below("costratified.tunneling_series_vs_theta", tunnel_dev, 1e-10));
  out.push_back(below("costratified.tunneling_semiclassical_limit", costratified::tunneling_probability(0.005), 1e-6));
  out.push_back(below("costratified.tunneling_strong_limit", 1.0 - costratified::tunneling_probability(5.0), 0.01));

  double gram_xi = 0.0;
  {
    const auto p = ModelParams::reduced(0.125, 6.0);
    const auto levels = mathieu::solve_levels(8, spectrum::mathieu_q(p));
    std::vector<costratified::StateVector> xi;
    for (const auto& sol : levels) xi.push_back(spectrum::eigenstate_from_solution(sol, p));
    for (std::size_t m = 0; m < xi.size(); ++m)
      for (std::size_t n = 0; n < xi.size(); ++n)
        gram_xi = std::max(gram_xi, std::abs(costratified::inner(xi[m], xi[n]) - (m == n ? 1.0 : 0.0)));
  }
  out.push_back(below("orthonormality.xi_gram", gram_xi, 1e-9));

  double gram_se = 0.0;
  {
    const GaussLegendre rule(256, -kPi / 2, 0.0);
    const auto levels = mathieu::solve_levels(8, 24.0);
    for (unsigned m = 0; m < 8; ++m) {
      for (unsigned n = 0; n < 8; ++n) {
        const double g = rule.integrate([&](double y) {
          return 2.0 * mathieu::se(levels[m], y) * mathieu::se(levels[n], y);
        }) * 2.0 / kPi;
        gram_se = std::max(gram_se, std::abs(g - (m == n ? 1.0 : 0.0)));
      }
    }
  }
  out.push_back(below("orthonormality.se_gram", gram_se, 1e-9));

  // Completeness over 60 levels on a coarse copy of the figure grid, plus the
  // reconstruction of psi_+ from the same overlaps. The probability sum alone
  // cannot see a sign error that swaps psi_+ for psi_-.
  constexpr unsigned kLevels = 60;
  double deficit = 0.0, reconstruction = 0.0, out_of_range = 0.0;
  for (double t : ts) {
    for (double nu : {0.1, 1.0, 10.0, 100.0}) {
      const auto p = ModelParams::reduced(t, nu);
      const auto levels = mathieu::solve_levels(kLevels, spectrum::mathieu_q(p), spectrum::joint_truncation(p, kLevels));
      const auto psi = costratified::psi_plus(p, levels.front().trunc);
      double sum = 0.0;
      auto rebuilt = costratified::StateVector::basis(0, psi.trunc(), p).scaled(0.0);
      for (const auto& sol : levels) {
        const double a = overlap(sol, t, costratified::Stratum::Plus);
        const double b = overlap(sol, t, costratified::Stratum::Minus);
        for (double prob : {a * a, b * b}) {
          if (prob < 0.0) out_of_range = std::max(out_of_range, -prob);
          if (prob > 1.0) out_of_range = std::max(out_of_range, prob - 1.0);
        }
        sum += a * a;
        rebuilt = rebuilt + spectrum::eigenstate_from_solution(sol, p).scaled(a);
      }
      deficit = std::max(deficit, 1.0 - sum);
      reconstruction = std::max(reconstruction, (rebuilt - psi).norm());
    }
  }
  out.push_back(below("completeness.sum_P_plus_deficit", std::max(deficit, 0.0), 1e-6));
  out.push_back(below("completeness.psi_plus_reconstruction", reconstruction, 1e-3));
  out.push_back(exact("completeness.probabilities_in_unit_interval", out_of_range));

  double closed = 0.0;
  for (double t : ts) {
    const double n2 = costratified::normalization_squared(t);
    const auto levels = mathieu::solve_levels(10, 0.0, costratified::default_truncation(t));
    for (unsigned n = 0; n < 10; ++n) {
      const double a = overlap(levels[n], t, costratified::Stratum::Plus);
      const double m = n + 1.0;
      closed = std::max(closed, std::abs(a * a - m * m * std::exp(-t * m * m) / n2));
    }
  }
  out.push_back(below("spectrum.free_projector_closed_form", closed, 1e-10));
  return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::ranges::all_of(checks, [](const CheckResult& c) { return c.passed; });
}

void write_report(std::ostream& out, const std::vector<CheckResult>& checks) {
  std::size_t passed = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " max_residual=" << format_number(c.max_residual)
        << " tolerance=" << format_number(c.tolerance) << '\n';
    if (c.passed) ++passed;
  }
  out << "summary: " << passed << '/' << checks.size() << " checks passed\n";
}

}  // namespace plaquette::cli
