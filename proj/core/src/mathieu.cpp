#include "plaquette/mathieu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "plaquette/errors.hpp"

namespace plaquette::mathieu {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kResidualTarget = 1e-13;
constexpr std::size_t kMaxTrunc = std::size_t{1} << 16;

double diagonal(std::size_t k) {
  const double m = 2.0 * static_cast<double>(k) + 2.0;
  return m * m;
}

// Number of eigenvalues of T strictly below x (Sturm sequence via LDL^T pivots).
std::size_t sturm_count(std::size_t size, double q, double x) {
  const double q2 = q * q;
  const double tiny = kEps * (std::abs(q) + 1.0);
  std::size_t count = 0;
  double pivot = diagonal(0) - x;
  if (pivot < 0.0) ++count;
  for (std::size_t k = 1; k < size; ++k) {
    if (pivot == 0.0) pivot = tiny;
    pivot = diagonal(k) - x - q2 / pivot;
    if (pivot < 0.0) ++count;
  }
  return count;
}

double bisect_eigenvalue(unsigned n, double q, std::size_t size) {
  // Gershgorin interval.
  const double radius = 2.0 * std::abs(q);
  double lo = diagonal(0) - radius;
  double hi = diagonal(size - 1) + radius;
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= 2.0 * kEps * std::max(std::abs(lo), std::abs(hi))) break;
    if (sturm_count(size, q, mid) <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Solves (T - shift I) x = rhs in place by Gaussian elimination with partial
// pivoting on the tridiagonal structure.
void shifted_solve(double q, double shift, std::vector<double>& rhs, double scale) {
  const std::size_t size = rhs.size();
  std::vector<double> d(size);
  std::vector<double> du(size > 0 ? size - 1 : 0, q);
  std::vector<double> du2(size > 1 ? size - 2 : 0, 0.0);
  std::vector<double> mult(size > 0 ? size - 1 : 0, 0.0);
  std::vector<char> swapped(size > 0 ? size - 1 : 0, 0);
  for (std::size_t k = 0; k < size; ++k) d[k] = diagonal(k) - shift;
  const double tiny = kEps * scale;

  for (std::size_t i = 0; i + 1 < size; ++i) {
    const double sub = q;
    if (std::abs(d[i]) >= std::abs(sub)) {
      if (d[i] == 0.0) d[i] = tiny;
      const double l = sub / d[i];
      mult[i] = l;
      d[i + 1] -= l * du[i];
    } else {
      const double l = d[i] / sub;
      mult[i] = l;
      d[i] = sub;
      const double temp = d[i + 1];
      d[i + 1] = du[i] - l * temp;
      if (i + 2 < size) {
        du2[i] = du[i + 1];
        du[i + 1] = -l * du2[i];
      }
      du[i] = temp;
      swapped[i] = 1;
    }
  }
  if (d[size - 1] == 0.0) d[size - 1] = tiny;

  for (std::size_t i = 0; i + 1 < size; ++i) {
    if (swapped[i]) std::swap(rhs[i], rhs[i + 1]);
    rhs[i + 1] -= mult[i] * rhs[i];
  }
  for (std::size_t i = size; i-- > 0;) {
    double v = rhs[i];
    if (i + 1 < size) v -= du[i] * rhs[i + 1];
    if (i + 2 < size) v -= du2[i] * rhs[i + 2];
    rhs[i] = v / d[i];
  }
}

double normalize(std::vector<double>& v) {
  double norm2 = 0.0;
  for (double x : v) norm2 += x * x;
  const double norm = std::sqrt(norm2);
  for (double& x : v) x /= norm;
  return norm;
}

double eigen_residual(const std::vector<double>& v, double q, double b) {
  double worst = 0.0;
  const std::size_t size = v.size();
  for (std::size_t k = 0; k < size; ++k) {
    double tv = diagonal(k) * v[k];
    if (k > 0) tv += q * v[k - 1];
    if (k + 1 < size) tv += q * v[k + 1];
    worst = std::max(worst, std::abs(tv - b * v[k]));
  }
  return worst;
}

}  // namespace

std::size_t default_truncation(unsigned n, double q) {
  const auto from_q = static_cast<std::size_t>(std::ceil(2.0 * std::sqrt(std::abs(q)))) + kMinTailRows;
  return std::max<std::size_t>(n + kMinTailRows, from_q);
}

MathieuSolution solve(unsigned n, double q, std::size_t trunc) {
  if (!std::isfinite(q)) throw std::invalid_argument("mathieu::solve: q must be finite");
  if (trunc < n + kMinTailRows) {
    throw std::invalid_argument("mathieu::solve: truncation " + std::to_string(trunc) +
                                " is below n + 16 = " + std::to_string(n + kMinTailRows));
  }

  MathieuSolution sol;
  sol.n = n;
  sol.q = q;
  sol.trunc = trunc;
  sol.coeffs.assign(trunc, 0.0);

  if (q == 0.0) {
    sol.b = diagonal(n);
    sol.coeffs[n] = 1.0;
    return sol;
  }

  const double scale = diagonal(trunc - 1) + 2.0 * std::abs(q);
  sol.b = bisect_eigenvalue(n, q, trunc);

  std::vector<double>& v = sol.coeffs;
  std::fill(v.begin(), v.end(), 1.0 / std::sqrt(static_cast<double>(trunc)));
  double residual = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 12; ++iter) {
    shifted_solve(q, sol.b, v, scale);
    normalize(v);
    residual = eigen_residual(v, q, sol.b);
    if (iter >= 2 && residual <= kResidualTarget * scale) break;
  }
  sol.residual = residual;
  if (!(residual <= kResidualTarget * scale)) {
    throw ConvergenceError("mathieu::solve: eigenpair residual " + std::to_string(residual) +
                           " above target for n=" + std::to_string(n) + ", q=" + std::to_string(q));
  }

  // se' at the bottom of the potential well (y = -pi/2 for q >= 0, y = 0 for
  // q < 0) never vanishes, so its sign is constant along the branch through
  // B = e_n at q = 0, where it equals (-1)^(n+1) (resp. +1).
  double slope = 0.0;
  for (std::size_t k = 0; k < trunc; ++k) {
    const double m = 2.0 * static_cast<double>(k) + 2.0;
    slope += (q > 0.0 && k % 2 == 0) ? -m * v[k] : m * v[k];
  }
  const bool want_positive = q < 0.0 || n % 2 == 1;
  if ((slope > 0.0) != want_positive) {
    for (double& x : v) x = -x;
  }
  sol.truncation_warning = std::abs(v.back()) > kTailTolerance;
  return sol;
}

MathieuSolution solve(unsigned n, double q) {
  for (std::size_t trunc = default_truncation(n, q); trunc <= kMaxTrunc; trunc *= 2) {
    MathieuSolution sol = solve(n, q, trunc);
    if (!sol.truncation_warning) return sol;
  }
  throw TruncationError("mathieu::solve: no adequate truncation found");
}

std::vector<MathieuSolution> solve_levels(unsigned count, double q, std::size_t min_trunc) {
  if (count == 0) return {};
  std::size_t trunc = std::max(default_truncation(count - 1, q), min_trunc);
  for (; trunc <= kMaxTrunc; trunc *= 2) {
    std::vector<MathieuSolution> levels;
    levels.reserve(count);
    bool clean = true;
    for (unsigned n = 0; n < count && clean; ++n) {
      levels.push_back(solve(n, q, trunc));
      clean = !levels.back().truncation_warning;
    }
    if (clean) return levels;
  }
  throw TruncationError("mathieu::solve_levels: no adequate truncation found");
}

double se(const MathieuSolution& sol, double y) {
  double sum = 0.0;
  for (std::size_t k = 0; k < sol.coeffs.size(); ++k) {
    sum += sol.coeffs[k] * std::sin((2.0 * k + 2.0) * y);
  }
  return sum;
}

double se(unsigned n, double q, double y) { return se(solve(n, q), y); }

double se_prime(const MathieuSolution& sol, double y) {
  double sum = 0.0;
  for (std::size_t k = 0; k < sol.coeffs.size(); ++k) {
    const double m = 2.0 * k + 2.0;
    sum += sol.coeffs[k] * m * std::cos(m * y);
  }
  return sum;
}

double se_second(const MathieuSolution& sol, double y) {
  double sum = 0.0;
  for (std::size_t k = 0; k < sol.coeffs.size(); ++k) {
    const double m = 2.0 * k + 2.0;
    sum -= sol.coeffs[k] * m * m * std::sin(m * y);
  }
  return sum;
}

double recurrence_residual(std::span<const double> coeffs, double b, double q) {
  double worst = 0.0;
  const std::size_t size = coeffs.size();
  for (std::size_t k = 0; k < size; ++k) {
    const double below = k > 0 ? coeffs[k - 1] : 0.0;
    const double above = k + 1 < size ? coeffs[k + 1] : 0.0;
    const double r = (b - diagonal(k)) * coeffs[k] - q * (below + above);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double recurrence_fit_residual(std::span<const double> coeffs) {
  const auto size = static_cast<Eigen::Index>(coeffs.size());
  Eigen::MatrixXd design(size, 2);
  Eigen::VectorXd target(size);
  for (Eigen::Index k = 0; k < size; ++k) {
    const double below = k > 0 ? coeffs[k - 1] : 0.0;
    const double above = k + 1 < size ? coeffs[k + 1] : 0.0;
    design(k, 0) = coeffs[k];
    design(k, 1) = -(below + above);
    target(k) = diagonal(static_cast<std::size_t>(k)) * coeffs[k];
  }
  const double target_norm = target.norm();
  if (target_norm == 0.0) return 0.0;
  const Eigen::Vector2d fit = design.colPivHouseholderQr().solve(target);
  return (design * fit - target).norm() / target_norm;
}

MathieuSolution SolutionCache::get(unsigned n, double q, std::size_t trunc) {
  const auto key = std::make_tuple(n, q, trunc);
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  }
  MathieuSolution sol = solve(n, q, trunc);
  std::unique_lock lock(mutex_);
  return entries_.try_emplace(key, std::move(sol)).first->second;
}

std::size_t SolutionCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void SolutionCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

}  // namespace plaquette::mathieu
