#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace plaquette::geometry {

/// Exponent multi-index over an ordered generator list.
using Exponents = std::vector<unsigned>;

/// Real polynomial in a fixed number of variables, stored sparsely.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(std::size_t variables = 0) : variables_(variables) {}

  static Polynomial constant(std::size_t variables, double value);
  static Polynomial variable(std::size_t variables, std::size_t index);
  static Polynomial monomial(Exponents exponents, double coefficient);

  std::size_t variables() const { return variables_; }
  const std::map<Exponents, double>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  /// Adds coefficient * x^exponents, dropping the term if it cancels.
  void add_term(const Exponents& exponents, double coefficient);

  Polynomial derivative(std::size_t index) const;
  double evaluate(std::span<const double> point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(double factor);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(std::span<const std::string> names) const;

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t variables_;
  std::map<Exponents, double> terms_;
};

}  // namespace plaquette::geometry
