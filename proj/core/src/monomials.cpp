#include "plaquette/geometry/monomials.hpp"

#include <stdexcept>

namespace plaquette::geometry {

namespace {

void enumerate(std::size_t position, unsigned remaining, MonomialExponents& current,
               std::vector<MonomialExponents>& out) {
  const std::size_t s = current.size();
  const auto weight = static_cast<unsigned>(position + 1);
  if (position + 1 == s) {
    if (remaining % weight != 0) return;
    current[position] = remaining / weight;
    out.push_back(current);
    current[position] = 0;
    return;
  }
  for (unsigned a = remaining / weight + 1; a-- > 0;) {
    current[position] = a;
    enumerate(position + 1, remaining - a * weight, current, out);
  }
  current[position] = 0;
}

}  // namespace

std::vector<MonomialExponents> monomial_decomposition(std::size_t s, unsigned k) {
  if (s == 0) throw std::invalid_argument("monomial_decomposition: s must be >= 1");
  std::vector<MonomialExponents> out;
  MonomialExponents current(s, 0);
  enumerate(0, k, current, out);
  return out;
}

RestrictionSplit restriction_kernel(std::size_t s, unsigned k) {
  if (s < 2) throw std::invalid_argument("restriction_kernel: s must be >= 2");
  RestrictionSplit split;
  for (auto& e : monomial_decomposition(s, k)) {
    (e.back() >= 1 ? split.kernel : split.image).push_back(std::move(e));
  }
  return split;
}

std::string monomial_label(const MonomialExponents& exponents) {
  std::string label;
  for (std::size_t m = 0; m < exponents.size(); ++m) {
    if (exponents[m] == 0) continue;
    if (!label.empty()) label += ' ';
    label += 'd' + std::to_string(m + 1);
    if (exponents[m] > 1) label += '^' + std::to_string(exponents[m]);
  }
  return label.empty() ? "1" : label;
}

}  // namespace plaquette::geometry
