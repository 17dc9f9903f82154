#pragma once

#include <optional>

#include "eulerfact/log_value.hpp"

namespace eulerfact {

// The (a, b) pair defining a product family in arithmetic progression.
struct Parameters {
  double a;
  double b;
  Parameters(double a, double b);  // requires a > 0, b > 0, finite
};

// Euler's three product families:
//   GammaE(x) = a (a+b) (a+2b) ... (a+(x-1)b)
//   Delta(x)  = a (a+2b) (a+4b) ... (a+(2x-2)b)
//   Theta(x)  = (a+b) (a+3b) ... (a+(2x-1)b)
enum class FamilyKind { GammaE, Delta, Theta };

// Delta and Theta are GammaE under a parameter substitution: Delta steps
// by 2b starting at a, Theta steps by 2b starting at a+b.  Everything in
// this module and in the asymptotics runs through this mapping.
Parameters effective_parameters(FamilyKind kind, const Parameters& params);

// Exact n-term product in log space (n >= 1).  Sign is always +1 since
// every factor is positive.
LogValue product_oracle(FamilyKind kind, const Parameters& params, long long n);

// Real-argument continuations via the ordinary Gamma function:
//   GammaE(x) = b^x Gamma(x + a/b) / Gamma(a/b),
// and the same formula over the substituted parameters for Delta/Theta.
// The shifted Gamma argument must be strictly positive.
LogValue gamma_e(const Parameters& params, double x);
LogValue delta(const Parameters& params, double x);
LogValue theta(const Parameters& params, double x);
LogValue evaluate(FamilyKind kind, const Parameters& params, double x);

// Treats x as the integer round(x) when |x - round(x)| <= 1e-9 (grid
// arithmetic noise); used by cross-checks against product_oracle.
std::optional<long long> integer_argument(double x);

}  // namespace eulerfact
