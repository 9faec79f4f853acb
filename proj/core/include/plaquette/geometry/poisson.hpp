#pragma once

// Polynomial Poisson algebras presented by generators, a bracket table on the
// generators, and defining relations. The bracket of arbitrary polynomials is
// the bilinear Leibniz extension
//   {f, g} = sum_(i,j) (df/dx_i)(dg/dx_j) {x_i, x_j}.

#include <cstddef>
#include <string>
#include <vector>

#include "plaquette/geometry/polynomial.hpp"

namespace plaquette::geometry {

/// Assignment of a value to each generator of a table.
using PhasePoint = std::vector<double>;

class PoissonTable {
 public:
  explicit PoissonTable(std::vector<std::string> generators);

  /// Sets {g_i, g_j} = value and {g_j, g_i} = -value.
  void set_bracket(const std::string& lhs, const std::string& rhs, const Polynomial& value);
  void add_relation(const Polynomial& relation);

  std::size_t size() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  std::size_t index_of(const std::string& name) const;
  Polynomial generator(const std::string& name) const;
  const Polynomial& generator_bracket(std::size_t i, std::size_t j) const;

  /// Largest |relation(pt)| relative to the magnitude of its terms at pt.
  double relation_defect(const PhasePoint& pt) const;
  /// Throws OffVarietyError unless every relation vanishes at pt within 1e-10
  /// (relative to the size of its terms).
  void require_on_variety(const PhasePoint& pt) const;

  /// Antisymmetric matrix of generator brackets evaluated at pt (row-major).
  std::vector<double> tensor_at(const PhasePoint& pt) const;

 private:
  std::vector<std::string> generators_;
  std::vector<Polynomial> table_;
  std::vector<Polynomial> relations_;
};

/// {f, g}. Throws UnknownGeneratorError if f or g are over another generator set.
Polynomial bracket(const PoissonTable& table, const Polynomial& f, const Polynomial& g);

/// |{f,{g,h}} + {g,{h,f}} + {h,{f,g}}| at pt; pt must lie on the variety.
double jacobi_residual(const PoissonTable& table, const Polynomial& f, const Polynomial& g,
                       const Polynomial& h, const PhasePoint& pt);

/// max over relations of |{g_i, relation}| at pt; pt must lie on the variety.
double relation_casimir_residual(const PoissonTable& table, const std::string& generator,
                                 const PhasePoint& pt);

/// Semicone x^2 + y^2 = r^2 (r >= 0): {x,y} = 2r, {x,r} = 2y, {y,r} = -2x.
PoissonTable semicone_table();

/// Canoe Y^2 = (X^2 + Y^2 + 4(tau - 1)) tau (tau >= 0):
/// {X,Y} = X^2 + Y^2 + 4(2 tau - 1), {X,tau} = 2(1 - tau) Y, {Y,tau} = 2 tau X.
PoissonTable canoe_table();

/// Numerical rank of the evaluated Poisson tensor (singular values above
/// tol * max(1, sigma_max); an exactly zero tensor has rank 0).
std::size_t tensor_rank(const PoissonTable& table, const PhasePoint& pt, double tol = 1e-10);

}  // namespace plaquette::geometry
