#pragma once

#include <vector>

#include "eulerfact/log_value.hpp"

namespace eulerfact {

// Largest Bernoulli index kept by the shared table (B_0 .. B_60).
inline constexpr int kMaxBernoulliIndex = 60;

// ln Gamma(x) for x > 0.  Lanczos approximation (g = 7, 9 coefficients)
// for x >= 1/2, reflection below that.  Throws std::domain_error outside
// the domain.
double log_gamma(double x);

// Gamma(x) for any real x that is not a pole (0, -1, -2, ...).
// Negative arguments go through Gamma(x) Gamma(1-x) = pi / sin(pi x).
double gamma(double x);

// (sign, ln|Gamma(x)|) for any non-pole real x; never overflows.
LogValue signed_log_gamma(double x);

// Bernoulli numbers B_0 .. B_max_index with the B_1 = -1/2 convention.
struct BernoulliTable {
  int max_index = 0;           // even, <= kMaxBernoulliIndex
  std::vector<double> values;  // values[i] = B_i
};

// Exact rational recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0, rounded to
// double once per entry.  max_index must be even, positive and <= 60.
BernoulliTable bernoulli_numbers(int max_index);

// The Bernoulli tail of the Stirling series,
//   sum_{j=1}^{terms}  B_{2j} / (2j (2j-1) x^(2j-1)),
// for x > 0 and 0 <= terms <= 30.  The truncation error of the full
// series is bounded in magnitude by the first omitted term.
double stirling_correction_series(double x, int terms);

// Truncated Stirling series for ln Gamma(x), x >= 1:
//   (x - 1/2) ln x - x + ln(2 pi)/2 + stirling_correction_series(x, terms)
double stirling_log_gamma(double x, int terms);

}  // namespace eulerfact
