#pragma once

#include "eulerfact/euler_family.hpp"
#include "eulerfact/log_value.hpp"

namespace eulerfact {

// The growth constants of the three families and the bridge value
// k = Delta(1/2).  They satisfy
//   A = B C / sqrt(e),   B = C k sqrt(e),   A = B^2 / (e k).
struct AsymptoticConstants {
  double A;
  double B;
  double C;
  double k;
};

// Result of recovering a growth constant from the exact integer product,
// the way the constants were originally pinned down numerically.
struct ConstantEstimate {
  long long n_used;
  double estimate;
  double closed_form;
  double relative_error;  // |estimate - closed_form| / closed_form
};

// Closed forms.  A = sqrt(2 pi) / Gamma(a/b) * e^(1 - a/b) * b^(1/2 - a/b);
// B is A with b doubled; C = B / (k sqrt(e)); k = Delta(1/2).
double constant_A(const Parameters& params);
double constant_B(const Parameters& params);
double constant_C(const Parameters& params);
double constant_k(const Parameters& params);

// ln of the constant matching `kind` (A, B or C).
double log_family_constant(FamilyKind kind, const Parameters& params);

// Computes all four constants and verifies the three relations above to
// 1e-11 relative; a violation means a math-layer bug and throws
// std::logic_error.
AsymptoticConstants assemble_constants(const Parameters& params);

// Leading-order growth law in log space:
//   GammaE(x) ~ A e^-x (a - b + b x)^(a/b + x - 1/2)
//   Delta(x)  ~ B e^-x (a - 2b + 2bx)^(a/(2b) + x - 1/2)
//   Theta(x)  ~ C e^-x (a - b + 2bx)^(a/(2b) + x)
// The power base must be strictly positive.
LogValue leading_asymptote(FamilyKind kind, const Parameters& params, double x);

// estimate = exact n-term product / (asymptote with the constant removed),
// evaluated at x = n.  Converges to the matching constant with error
// O(1/n).  Requires n >= 10.
ConstantEstimate estimate_constant(FamilyKind kind, const Parameters& params,
                                   long long n);

// leading_asymptote plus the Bernoulli correction series of the Stirling
// expansion taken at the shifted argument x + a/b - 1 (in effective
// parameters).  terms = 0 reproduces leading_asymptote exactly; the result
// agrees with the exact continuation to within the first omitted term.
LogValue em_corrected_log(FamilyKind kind, const Parameters& params, double x,
                          int terms);

}  // namespace eulerfact
