#pragma once

#include <string>
#include <vector>

#include "eulerfact/euler_family.hpp"

namespace eulerfact {

// Default pass thresholds.  Multiplication accumulates more Gamma
// evaluations per point, hence the looser default.
inline constexpr double kDuplicationTolerance = 1e-11;
inline constexpr double kMultiplicationTolerance = 1e-10;
inline constexpr double kChainTolerance = 1e-11;

struct VerificationReport {
  std::string identity_name;
  std::vector<double> grid;       // evaluation points, one per residual
  std::vector<double> residuals;  // relative residuals
  double max_residual = 0.0;
  double mean_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;  // max_residual <= tolerance
};

// Relative residual of the Legendre duplication formula
//   Gamma(x) = 2^(x-1) / sqrt(pi) * Gamma(x/2) Gamma((x+1)/2)
// computed in log space as |1 - exp(log RHS - log LHS)|.  Requires x > 0.
double duplication_residual(double x);

// Relative residual of the Gauss multiplication formula
//   Gamma(x) = sqrt(n / (2 pi)^(n-1)) n^(x-1) prod_j Gamma((x+j)/n),
// n in [2, 12], x > 0.  n = 2 is the duplication formula and shares its
// code path, so the two residuals are bitwise identical.
double multiplication_residual(int n, double x);

// Replays the derivation of the duplication formula from the constant
// relations.  Three residuals, in grid order 1, 2, 3:
//   1. A = B^2 e^-1 / k
//   2. 1/Gamma(a/b) = sqrt(2 pi) 2^(1/2 - a/b)
//                     / (Gamma(a/(2b)) Gamma(1/2 + a/(2b)))
//      (what is left of relation 1 after the closed forms cancel)
//   3. the duplication residual at x = a/b
// Passes iff all three are <= 1e-11.
VerificationReport derivation_chain_check(const Parameters& params);

struct IdentityCheck {
  enum class Kind { Duplication, Multiplication };
  Kind kind;
  int order;  // n of the multiplication formula; 2 for duplication

  static IdentityCheck duplication() { return {Kind::Duplication, 2}; }
  static IdentityCheck multiplication(int n) {
    return {Kind::Multiplication, n};
  }
  std::string name() const;
};

// Evaluates the residual on a uniform grid over [x_min, x_max] with
// `steps` points.  Grid points within 1e-9 of a pole of any Gamma
// argument are nudged by +1e-6 so reports stay deterministic.
// Requires 0 < x_min < x_max, steps >= 2, tolerance > 0.
VerificationReport verify_grid(const IdentityCheck& identity, double x_min,
                               double x_max, int steps, double tolerance);

}  // namespace eulerfact
