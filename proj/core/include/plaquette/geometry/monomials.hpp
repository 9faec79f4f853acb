#pragma once

// Highest-weight monomials delta_1^a1 delta_2^a2 ... delta_s^as of degree k
// in the principal minors, i.e. exponent tuples with a1 + 2 a2 + ... + s as = k.

#include <cstddef>
#include <string>
#include <vector>

namespace plaquette::geometry {

using MonomialExponents = std::vector<unsigned>;

/// All (a_1, ..., a_s) with sum_m m a_m = k, in descending lexicographic order
/// (so (k, 0, ..., 0) comes first). Count equals the number of partitions of k
/// into parts of size at most s.
std::vector<MonomialExponents> monomial_decomposition(std::size_t s, unsigned k);

struct RestrictionSplit {
  std::vector<MonomialExponents> kernel;  ///< a_s >= 1
  std::vector<MonomialExponents> image;   ///< a_s = 0, mapped isomorphically
};

/// Splits monomial_decomposition(s, k) by whether delta_s occurs. s >= 2.
RestrictionSplit restriction_kernel(std::size_t s, unsigned k);

/// "d1^2 d3" style label; "1" for the empty product.
std::string monomial_label(const MonomialExponents& exponents);

}  // namespace plaquette::geometry
