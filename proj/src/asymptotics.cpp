#include "eulerfact/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "eulerfact/special_core.hpp"

namespace eulerfact {

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;
constexpr double kSqrtE = 1.6487212707001281468486507878142;

// ln A = ln(2 pi)/2 - ln Gamma(a/b) + (1 - a/b) + (1/2 - a/b) ln b.
// B and C are this same form over the substituted parameters.
double log_constant_A(const Parameters& params) {
  const double s = params.a / params.b;
  return kLogSqrt2Pi - log_gamma(s) + (1.0 - s) + (0.5 - s) * std::log(params.b);
}

// The constant-free part of the leading asymptote at x, in effective
// parameters: -x + (s + x - 1/2) ln(b (x + s - 1)).
double log_asymptote_shape(const Parameters& eff, double x) {
  const double s = eff.a / eff.b;
  const double base = eff.b * (x + s - 1.0);
  if (!std::isfinite(x) || base <= 0.0) {
    throw std::domain_error("leading_asymptote: power base must be positive");
  }
  return -x + (s + x - 0.5) * std::log(base);
}

}  // namespace

double constant_A(const Parameters& params) {
  return std::exp(log_constant_A(params));
}

double constant_B(const Parameters& params) {
  return constant_A(Parameters(params.a, 2.0 * params.b));
}

double constant_k(const Parameters& params) {
  return std::exp(delta(params, 0.5).log_abs);
}

double constant_C(const Parameters& params) {
  return constant_B(params) / (constant_k(params) * kSqrtE);
}

double log_family_constant(FamilyKind kind, const Parameters& params) {
  return log_constant_A(effective_parameters(kind, params));
}

AsymptoticConstants assemble_constants(const Parameters& params) {
  const AsymptoticConstants c{constant_A(params), constant_B(params),
                              constant_C(params), constant_k(params)};
  const double r1 = std::abs(c.A - c.B * c.C / kSqrtE) / c.A;
  const double r2 = std::abs(c.B - c.C * c.k * kSqrtE) / c.B;
  const double r3 = std::abs(c.A - c.B * c.B / (M_E * c.k)) / c.A;
  if (!(r1 <= 1e-11 && r2 <= 1e-11 && r3 <= 1e-11)) {
    throw std::logic_error(
        "assemble_constants: constant relations violated (math-layer bug)");
  }
  return c;
}

LogValue leading_asymptote(FamilyKind kind, const Parameters& params, double x) {
  const Parameters eff = effective_parameters(kind, params);
  return LogValue::from_log(log_constant_A(eff) + log_asymptote_shape(eff, x));
}

ConstantEstimate estimate_constant(FamilyKind kind, const Parameters& params,
                                   long long n) {
  if (n < 10) {
    throw std::invalid_argument("estimate_constant: n must be >= 10");
  }
  const Parameters eff = effective_parameters(kind, params);
  const LogValue product = product_oracle(kind, params, n);
  const double shape = log_asymptote_shape(eff, static_cast<double>(n));
  ConstantEstimate est;
  est.n_used = n;
  est.estimate = std::exp(product.log_abs - shape);
  est.closed_form = std::exp(log_constant_A(eff));
  est.relative_error = std::abs(est.estimate - est.closed_form) / est.closed_form;
  return est;
}

LogValue em_corrected_log(FamilyKind kind, const Parameters& params, double x,
                          int terms) {
  const Parameters eff = effective_parameters(kind, params);
  const double lead = log_constant_A(eff) + log_asymptote_shape(eff, x);
  // The leading term is the Stirling leading form of ln Gamma(x + a/b)
  // written at the shifted point z = x + a/b - 1, so the matching
  // correction series is the Bernoulli tail at z.
  const double z = x + eff.a / eff.b - 1.0;
  return LogValue::from_log(lead + stirling_correction_series(z, terms));
}

}  // namespace eulerfact
