#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "plaquette/spectrum.hpp"

namespace plaquette::cli {

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Jacobi / Poisson-ideal residuals, canoe tensor, momentum maps, decomposition counts.
std::vector<CheckResult> geometry_checks();

/// Spectral anchors, dual-oracle energies, orthonormality, completeness.
/// The overlap formula is injectable so a broken one can be shown to fail.
std::vector<CheckResult> spectral_checks(const spectrum::OverlapFormula& overlap = spectrum::stratum_overlap);

bool all_passed(const std::vector<CheckResult>& checks);

/// One line per check: PASS|FAIL name max_residual=... tolerance=...
void write_report(std::ostream& out, const std::vector<CheckResult>& checks);

}  // namespace plaquette::cli
