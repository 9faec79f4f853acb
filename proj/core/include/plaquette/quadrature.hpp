#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace plaquette {

/// Gauss-Legendre rule on [a, b].
class GaussLegendre {
 public:
  GaussLegendre(std::size_t order, double a, double b);

  std::size_t order() const { return nodes_.size(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(nodes_[i]);
    return sum;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

inline constexpr std::size_t kDefaultQuadratureOrder = 512;

/// <f, g> on L^2[0,pi] with measure dx/pi, so the constant 1 has norm 1.
double l2_inner(const std::function<double(double)>& f, const std::function<double(double)>& g,
                std::size_t order = kDefaultQuadratureOrder);

}  // namespace plaquette
