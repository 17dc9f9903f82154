#include "eulerfact/euler_family.hpp"

#include <cmath>
#include <stdexcept>

#include "eulerfact/special_core.hpp"

namespace eulerfact {

Parameters::Parameters(double a_, double b_) : a(a_), b(b_) {
  if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0 || b <= 0.0) {
    throw std::invalid_argument("Parameters: a and b must be positive and finite");
  }
}

Parameters effective_parameters(FamilyKind kind, const Parameters& params) {
  switch (kind) {
    case FamilyKind::GammaE:
      return params;
    case FamilyKind::Delta:
      return Parameters(params.a, 2.0 * params.b);
    case FamilyKind::Theta:
      return Parameters(params.a + params.b, 2.0 * params.b);
  }
  throw std::invalid_argument("effective_parameters: unknown family kind");
}

LogValue product_oracle(FamilyKind kind, const Parameters& params, long long n) {
  if (n < 1) {
    throw std::invalid_argument("product_oracle: n must be a positive integer");
  }
  const Parameters eff = effective_parameters(kind, params);
  // Kahan summation: the continuation cross-checks sit at 1e-11 on logs
  // that reach ~1e3, too tight for a plain running sum.
  double sum = 0.0;
  double carry = 0.0;
  for (long long j = 0; j < n; ++j) {
    const double term = std::log(eff.a + static_cast<double>(j) * eff.b);
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return LogValue::from_log(sum);
}

LogValue evaluate(FamilyKind kind, const Parameters& params, double x) {
  const Parameters eff = effective_parameters(kind, params);
  const double shift = eff.a / eff.b;
  if (!std::isfinite(x) || x + shift <= 0.0) {
    throw std::domain_error(
        "continuation: shifted Gamma argument must be positive");
  }
  const double log_val =
      x * std::log(eff.b) + log_gamma(x + shift) - log_gamma(shift);
  return LogValue::from_log(log_val);
}

LogValue gamma_e(const Parameters& params, double x) {
  return evaluate(FamilyKind::GammaE, params, x);
}

LogValue delta(const Parameters& params, double x) {
  return evaluate(FamilyKind::Delta, params, x);
}

LogValue theta(const Parameters& params, double x) {
  return evaluate(FamilyKind::Theta, params, x);
}

std::optional<long long> integer_argument(double x) {
  if (!std::isfinite(x)) return std::nullopt;
  const double rounded = std::round(x);
  if (std::abs(x - rounded) > 1e-9) return std::nullopt;
  if (std::abs(rounded) > 9.0e18) return std::nullopt;
  return static_cast<long long>(rounded);
}

}  // namespace eulerfact
