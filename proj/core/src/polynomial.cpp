#include "plaquette/geometry/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "plaquette/errors.hpp"

namespace plaquette::geometry {

namespace {

double integer_power(double x, unsigned e) {
  double result = 1.0;
  for (unsigned i = 0; i < e; ++i) result *= x;
  return result;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t variables, double value) {
  Polynomial p(variables);
  p.add_term(Exponents(variables, 0), value);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) throw UnknownGeneratorError("Polynomial::variable: index out of range");
  Exponents e(variables, 0);
  e[index] = 1;
  Polynomial p(variables);
  p.add_term(e, 1.0);
  return p;
}

Polynomial Polynomial::monomial(Exponents exponents, double coefficient) {
  Polynomial p(exponents.size());
  p.add_term(exponents, coefficient);
  return p;
}

unsigned Polynomial::degree() const {
  unsigned deg = 0;
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    deg = std::max(deg, d);
  }
  return deg;
}

void Polynomial::add_term(const Exponents& exponents, double coefficient) {
  if (exponents.size() != variables_) {
    throw UnknownGeneratorError("Polynomial: exponent vector has the wrong number of variables");
  }
  if (coefficient == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0.0) terms_.erase(it);
  }
}

Polynomial Polynomial::derivative(std::size_t index) const {
  if (index >= variables_) throw UnknownGeneratorError("Polynomial::derivative: index out of range");
  Polynomial d(variables_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents lowered = e;
    lowered[index] -= 1;
    d.add_term(lowered, c * e[index]);
  }
  return d;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != variables_) {
    throw UnknownGeneratorError("Polynomial::evaluate: point has the wrong dimension");
  }
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c;
    for (std::size_t i = 0; i < variables_; ++i) term *= integer_power(point[i], e[i]);
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::operator-() const { return *this * -1.0; }

void Polynomial::check_compatible(const Polynomial& other) const {
  if (other.variables_ != variables_) {
    throw UnknownGeneratorError("Polynomial: operands are over different generator sets");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(double factor) {
  if (factor == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= factor;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial product(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      product.add_term(e, ca * cb);
    }
  }
  return product;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const double magnitude = std::abs(c);
    bool constant = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
    if (magnitude != 1.0 || constant) out << magnitude;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (e[i] > 1) out << '^' << e[i];
    }
  }
  return out.str();
}

}  // namespace plaquette::geometry
