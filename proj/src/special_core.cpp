#include "eulerfact/special_core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>

namespace eulerfact {

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;  // ln(2 pi)/2
constexpr double kLogPi = 1.1447298858494001741434273513531;        // ln pi

// Lanczos coefficients for g = 7, 9 terms; ~15 significant digits on the
// right half line [J. SIAM Numer. Anal., Ser. B, 1 (1964) 86].
constexpr double kLanczos7[9] = {
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7,
};

// ln Gamma(x) for x >= 1/2.
double log_gamma_lanczos(double x) {
  const double z = x - 1.0;
  double series = kLanczos7[0];
  for (int k = 1; k < 9; ++k) {
    series += kLanczos7[k] / (z + k);
  }
  const double term1 = (z + 0.5) * std::log((z + 7.5) / M_E);
  return term1 + (kLogSqrt2Pi + std::log(series) - 7.0);
}

// sin(pi x) with exact argument reduction; avoids the accuracy loss of
// sin(M_PI * x) near integer x.
double sin_pi(double x) {
  double r = x - 2.0 * std::floor(0.5 * x);  // r in [0, 2)
  int sign = 1;
  if (r >= 1.0) {
    r -= 1.0;
    sign = -1;
  }
  if (r > 0.5) r = 1.0 - r;
  return sign * std::sin(M_PI * r);
}

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

}  // namespace

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::domain_error("log_gamma: argument must be finite and > 0");
  }
  if (x >= 0.5) return log_gamma_lanczos(x);
  // Reflection keeps full accuracy as x -> 0+, where the Lanczos series
  // alone starts to cancel.
  return kLogPi - std::log(sin_pi(x)) - log_gamma_lanczos(1.0 - x);
}

LogValue signed_log_gamma(double x) {
  if (!std::isfinite(x) || is_nonpositive_integer(x)) {
    throw std::domain_error(
        "signed_log_gamma: pole at zero and negative integers");
  }
  if (x > 0.0) return LogValue::from_log(log_gamma(x));
  const double s = sin_pi(x);
  const double log_abs = kLogPi - std::log(std::abs(s)) - log_gamma(1.0 - x);
  return LogValue::from_log(log_abs, s > 0.0 ? 1 : -1);
}

double gamma(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("gamma: argument must be finite");
  }
  if (x >= 0.5) return std::exp(log_gamma_lanczos(x));
  if (is_nonpositive_integer(x)) {
    throw std::domain_error("gamma: pole at zero and negative integers");
  }
  return signed_log_gamma(x).value();
}

BernoulliTable bernoulli_numbers(int max_index) {
  if (max_index <= 0 || max_index % 2 != 0 || max_index > kMaxBernoulliIndex) {
    throw std::invalid_argument(
        "bernoulli_numbers: max_index must be even, positive and <= 60");
  }
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;

  // sum_{j=0}^{m} C(m+1,j) B_j = 0  =>  B_m = -sum_{j<m} C(m+1,j) B_j / (m+1)
  std::vector<cpp_rational> exact(static_cast<size_t>(max_index) + 1);
  exact[0] = 1;
  exact[1] = cpp_rational(-1, 2);
  for (int m = 2; m <= max_index; ++m) {
    if (m % 2 != 0) continue;  // odd entries beyond B_1 stay exactly 0
    cpp_rational sum = 0;
    cpp_int binom = 1;  // C(m+1, j), starting at j = 0
    for (int j = 0; j < m; ++j) {
      sum += cpp_rational(binom) * exact[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    exact[m] = -sum / (m + 1);
  }

  BernoulliTable table;
  table.max_index = max_index;
  table.values.reserve(exact.size());
  for (const auto& q : exact) {
    table.values.push_back(q.convert_to<double>());
  }
  return table;
}

double stirling_correction_series(double x, int terms) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::domain_error(
        "stirling_correction_series: argument must be finite and > 0");
  }
  if (terms < 0 || terms > kMaxBernoulliIndex / 2) {
    throw std::invalid_argument(
        "stirling_correction_series: terms must be in [0, 30]");
  }
  static const BernoulliTable table = bernoulli_numbers(kMaxBernoulliIndex);
  const double x2 = x * x;
  double power = x;  // x^(2j-1)
  double sum = 0.0;
  for (int j = 1; j <= terms; ++j) {
    sum += table.values[2 * j] / ((2 * j) * (2 * j - 1) * power);
    power *= x2;
  }
  return sum;
}

double stirling_log_gamma(double x, int terms) {
  if (!std::isfinite(x) || x < 1.0) {
    throw std::domain_error("stirling_log_gamma: argument must be >= 1");
  }
  return (x - 0.5) * std::log(x) - x + kLogSqrt2Pi +
         stirling_correction_series(x, terms);
}

}  // namespace eulerfact
