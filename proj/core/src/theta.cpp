#include "plaquette/theta.hpp"

#include <cmath>

#include "plaquette/errors.hpp"

namespace plaquette::theta {

namespace {

constexpr double kRelativeCutoff = 1e-18;
constexpr long kMinTerms = 4;
constexpr long kMaxTerms = 10'000'000;

void check_nome(double nome, const char* who) {
  if (!(std::abs(nome) < 1.0)) throw DomainError(std::string(who) + ": |Q| must be < 1");
}

// Q^p for integer p >= 0 with the sign carried separately so large powers
// of |Q| near 1 stay in log space.
double signed_power(double nome, long long p) {
  if (p == 0) return 1.0;
  if (nome == 0.0) return 0.0;
  const double magnitude = std::exp(static_cast<double>(p) * std::log(std::abs(nome)));
  return (nome < 0.0 && (p % 2 != 0)) ? -magnitude : magnitude;
}

}  // namespace

double theta3(double nome) {
  check_nome(nome, "theta3");
  double tail = 0.0;
  for (long k = 1; k < kMaxTerms; ++k) {
    const long long k2 = static_cast<long long>(k) * k;
    const double term = signed_power(nome, k2);
    tail += term;
    const double partial = 1.0 + 2.0 * tail;
    if (k >= kMinTerms && std::abs(2.0 * term) <= kRelativeCutoff * std::abs(partial)) break;
    if (term == 0.0 && k >= kMinTerms) break;
  }
  return 1.0 + 2.0 * tail;
}

double theta3_prime(double nome) {
  check_nome(nome, "theta3_prime");
  double sum = 0.0;
  for (long k = 1; k < kMaxTerms; ++k) {
    const long long k2 = static_cast<long long>(k) * k;
    const double term = static_cast<double>(k2) * signed_power(nome, k2 - 1);
    sum += term;
    if (k >= kMinTerms && std::abs(term) <= kRelativeCutoff * std::abs(sum)) break;
    if (term == 0.0 && k >= kMinTerms) break;
  }
  return 2.0 * sum;
}

}  // namespace plaquette::theta
