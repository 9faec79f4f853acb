#include "plaquette/geometry/poisson.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "plaquette/errors.hpp"

namespace plaquette::geometry {

namespace {

constexpr double kOnVarietyTolerance = 1e-10;

// Sum of |term| over the monomials of p at pt: the scale against which
// cancellation in p(pt) is judged.
double term_magnitude(const Polynomial& p, std::span<const double> pt) {
  double sum = 0.0;
  for (const auto& [e, c] : p.terms()) {
    double term = std::abs(c);
    for (std::size_t i = 0; i < e.size(); ++i) term *= std::pow(std::abs(pt[i]), e[i]);
    sum += term;
  }
  return sum;
}

}  // namespace

PoissonTable::PoissonTable(std::vector<std::string> generators) : generators_(std::move(generators)) {
  const std::size_t n = generators_.size();
  table_.assign(n * n, Polynomial(n));
}

std::size_t PoissonTable::index_of(const std::string& name) const {
  const auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) throw UnknownGeneratorError("PoissonTable: unknown generator '" + name + "'");
  return static_cast<std::size_t>(it - generators_.begin());
}

Polynomial PoissonTable::generator(const std::string& name) const {
  return Polynomial::variable(size(), index_of(name));
}

void PoissonTable::set_bracket(const std::string& lhs, const std::string& rhs, const Polynomial& value) {
  const std::size_t i = index_of(lhs);
  const std::size_t j = index_of(rhs);
  if (value.variables() != size()) throw UnknownGeneratorError("PoissonTable: bracket over foreign generators");
  if (i == j) {
    if (!value.is_zero()) throw std::invalid_argument("PoissonTable: {g, g} must vanish");
    return;
  }
  table_[i * size() + j] = value;
  table_[j * size() + i] = -value;
}

void PoissonTable::add_relation(const Polynomial& relation) {
  if (relation.variables() != size()) throw UnknownGeneratorError("PoissonTable: relation over foreign generators");
  relations_.push_back(relation);
}

const Polynomial& PoissonTable::generator_bracket(std::size_t i, std::size_t j) const {
  return table_.at(i * size() + j);
}

double PoissonTable::relation_defect(const PhasePoint& pt) const {
  if (pt.size() != size()) throw UnknownGeneratorError("PoissonTable: point has the wrong dimension");
  double worst = 0.0;
  for (const auto& r : relations_) {
    const double scale = std::max(1.0, term_magnitude(r, pt));
    worst = std::max(worst, std::abs(r.evaluate(pt)) / scale);
  }
  return worst;
}

void PoissonTable::require_on_variety(const PhasePoint& pt) const {
  if (relation_defect(pt) > kOnVarietyTolerance) {
    throw OffVarietyError("point violates the defining relations");
  }
}

std::vector<double> PoissonTable::tensor_at(const PhasePoint& pt) const {
  const std::size_t n = size();
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = table_[i * n + j].evaluate(pt);
  }
  return m;
}

Polynomial bracket(const PoissonTable& table, const Polynomial& f, const Polynomial& g) {
  const std::size_t n = table.size();
  if (f.variables() != n || g.variables() != n) {
    throw UnknownGeneratorError("bracket: polynomial is not over the table's generators");
  }
  Polynomial result(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial df = f.derivative(i);
    if (df.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Polynomial& gij = table.generator_bracket(i, j);
      if (gij.is_zero()) continue;
      const Polynomial dg = g.derivative(j);
      if (dg.is_zero()) continue;
      result += df * dg * gij;
    }
  }
  return result;
}

double jacobi_residual(const PoissonTable& table, const Polynomial& f, const Polynomial& g,
                       const Polynomial& h, const PhasePoint& pt) {
  table.require_on_variety(pt);
  const Polynomial cyclic = bracket(table, f, bracket(table, g, h)) +
                            bracket(table, g, bracket(table, h, f)) +
                            bracket(table, h, bracket(table, f, g));
  return std::abs(cyclic.evaluate(pt));
}

double relation_casimir_residual(const PoissonTable& table, const std::string& generator,
                                 const PhasePoint& pt) {
  table.require_on_variety(pt);
  const Polynomial gen = table.generator(generator);
  double worst = 0.0;
  for (const auto& r : table.relations()) {
    worst = std::max(worst, std::abs(bracket(table, gen, r).evaluate(pt)));
  }
  return worst;
}

PoissonTable semicone_table() {
  PoissonTable t({"x", "y", "r"});
  const Polynomial x = t.generator("x");
  const Polynomial y = t.generator("y");
  const Polynomial r = t.generator("r");
  t.set_bracket("x", "y", 2.0 * r);
  t.set_bracket("x", "r", 2.0 * y);
  t.set_bracket("y", "r", -2.0 * x);
  t.add_relation(x * x + y * y - r * r);
  return t;
}

PoissonTable canoe_table() {
  PoissonTable t({"X", "Y", "tau"});
  const std::size_t n = t.size();
  const Polynomial X = t.generator("X");
  const Polynomial Y = t.generator("Y");
  const Polynomial tau = t.generator("tau");
  const Polynomial one = Polynomial::constant(n, 1.0);
  t.set_bracket("X", "Y", X * X + Y * Y + 4.0 * (2.0 * tau - one));
  t.set_bracket("X", "tau", 2.0 * (one - tau) * Y);
  t.set_bracket("Y", "tau", 2.0 * tau * X);
  t.add_relation(Y * Y - (X * X + Y * Y + 4.0 * (tau - one)) * tau);
  return t;
}

std::size_t tensor_rank(const PoissonTable& table, const PhasePoint& pt, double tol) {
  const auto n = static_cast<Eigen::Index>(table.size());
  const std::vector<double> values = table.tensor_at(pt);
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      values.data(), n, n);
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd s = svd.singularValues();
  const double cutoff = tol * std::max(1.0, s.size() > 0 ? s(0) : 0.0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cutoff) ++rank;
  }
  return rank;
}

}  // namespace plaquette::geometry
