#include "plaquette/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace plaquette {

GaussLegendre::GaussLegendre(std::size_t order, double a, double b)
    : nodes_(order), weights_(order) {
  if (order == 0) throw std::invalid_argument("GaussLegendre: order must be >= 1");
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  const std::size_t m = (order + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double pp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Three-term Legendre recurrence: p1 = P_order(z), p2 = P_(order-1)(z).
      double p1 = 1.0;
      double p2 = 0.0;
      for (std::size_t j = 1; j <= order; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / static_cast<double>(j);
      }
      pp = order * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / pp;
      z -= step;
      if (std::abs(step) <= 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    nodes_[i] = mid - half * z;
    nodes_[order - 1 - i] = mid + half * z;
    weights_[i] = half * w;
    weights_[order - 1 - i] = half * w;
  }
}

double l2_inner(const std::function<double(double)>& f, const std::function<double(double)>& g,
                std::size_t order) {
  const GaussLegendre rule(order, 0.0, std::numbers::pi);
  return rule.integrate([&](double x) { return f(x) * g(x); }) / std::numbers::pi;
}

}  // namespace plaquette
