#pragma once

// Odd pi-periodic Mathieu functions se_{2n+2}(y; q) and their characteristic
// values b_{2n+2}(q).
//
// The Fourier coefficients B_{2k+2} of se_{2n+2} = sum_k B_{2k+2} sin((2k+2) y)
// satisfy
//   (b - 4) B_2 - q B_4 = 0,
//   (b - 4k^2) B_{2k} - q (B_{2k-2} + B_{2k+2}) = 0,   k >= 2,
// i.e. (b, B) is an eigenpair of the symmetric tridiagonal matrix with
// diagonal (2k+2)^2 and off-diagonal q. The eigenpair is computed by Sturm
// bisection followed by inverse iteration.

#include <cstddef>
#include <map>
#include <shared_mutex>
#include <span>
#include <tuple>
#include <vector>

namespace plaquette::mathieu {

struct MathieuSolution {
  unsigned n = 0;
  double q = 0.0;
  /// Characteristic value b_{2n+2}(q).
  double b = 0.0;
  /// B_{2k+2}, k = 0 .. trunc-1, with sum B^2 = 1.
  std::vector<double> coeffs;
  std::size_t trunc = 0;
  /// ||T B - b B||_inf for the truncated recurrence matrix T.
  double residual = 0.0;
  /// Set when |B_{2 trunc}| > 1e-12: the tail may have been cut too early.
  bool truncation_warning = false;

  double tail() const { return coeffs.empty() ? 0.0 : coeffs.back(); }
};

inline constexpr std::size_t kMinTailRows = 16;
inline constexpr double kTailTolerance = 1e-12;

/// max(n + 16, ceil(2 sqrt|q|) + 16).
std::size_t default_truncation(unsigned n, double q);

/// Eigenpair number n (ascending) of the trunc x trunc recurrence matrix.
///
/// Sign convention: the coefficient vector is the continuation in q of the
/// anchor B = e_n at q = 0. It is pinned by the sign of se' at the bottom of
/// the potential well, which never vanishes: (-1)^(n+1) se'(-pi/2) > 0 for
/// q >= 0 and se'(0) > 0 for q < 0.
/// At q = 0 the solution is exactly b = (2n+2)^2, B = e_n.
///
/// Throws std::invalid_argument if trunc < n + 16 or q is not finite, and
/// ConvergenceError if the eigenpair residual misses its target.
MathieuSolution solve(unsigned n, double q, std::size_t trunc);

/// solve() at default_truncation(n, q), doubling the truncation while the
/// truncation warning is raised.
MathieuSolution solve(unsigned n, double q);

/// The first `count` eigenpairs sharing one truncation (at least the default
/// truncation for level count-1, grown until every tail is below 1e-12).
std::vector<MathieuSolution> solve_levels(unsigned count, double q, std::size_t min_trunc = 0);

/// se_{2n+2}(y; q) = sum_k B_{2k+2} sin((2k+2) y).
double se(const MathieuSolution& sol, double y);
double se(unsigned n, double q, double y);

/// Derivatives of se with respect to y by term-by-term differentiation.
double se_prime(const MathieuSolution& sol, double y);
double se_second(const MathieuSolution& sol, double y);

/// max_k |(b - 4(k+1)^2) B_{2k+2} - q (B_{2k} + B_{2k+4})| with B_0 := 0 and
/// B beyond the truncation taken as 0.
double recurrence_residual(std::span<const double> coeffs, double b, double q);

/// Smallest relative recurrence residual over all (b, q) for a given
/// coefficient vector: min_{b,q} ||r(b,q)|| / ||(4(k+1)^2 B_k)_k|| where r is
/// the residual vector of the recurrence. Zero iff the vector is (up to the
/// truncation) a Mathieu coefficient vector for some q.
double recurrence_fit_residual(std::span<const double> coeffs);

/// Memo of solutions keyed by (n, q, trunc). Safe for concurrent use.
class SolutionCache {
 public:
  MathieuSolution get(unsigned n, double q, std::size_t trunc);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::tuple<unsigned, double, std::size_t>, MathieuSolution> entries_;
};

}  // namespace plaquette::mathieu
