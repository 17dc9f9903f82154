#pragma once

#include <cmath>
#include <limits>

namespace eulerfact {

// Sign / log-magnitude representation of a real number.
//
// The generalized factorial products grow past double range long before
// their logarithms do (Gamma_E at x = 200 is already ~1e860), so every
// quantity of that kind is carried as (sign, ln|value|) and converted to
// linear scale only at the edges.
struct LogValue {
  int sign = 0;  // -1, 0 or +1; 0 iff the represented value is exactly zero
  double log_abs = -std::numeric_limits<double>::infinity();

  static LogValue zero() { return LogValue{}; }

  static LogValue one() { return LogValue{1, 0.0}; }

  static LogValue from_log(double log_magnitude, int sign = 1) {
    if (sign == 0) return zero();
    return LogValue{sign < 0 ? -1 : 1, log_magnitude};
  }

  static LogValue from_value(double v) {
    if (v == 0.0) return zero();
    return LogValue{v < 0.0 ? -1 : 1, std::log(std::abs(v))};
  }

  bool is_zero() const { return sign == 0; }

  // Overflows to +-inf (and underflows to 0) like a plain double would.
  double value() const {
    if (sign == 0) return 0.0;
    return static_cast<double>(sign) * std::exp(log_abs);
  }
};

inline LogValue operator*(const LogValue& lhs, const LogValue& rhs) {
  if (lhs.sign == 0 || rhs.sign == 0) return LogValue::zero();
  return LogValue{lhs.sign * rhs.sign, lhs.log_abs + rhs.log_abs};
}

inline LogValue operator/(const LogValue& lhs, const LogValue& rhs) {
  if (rhs.sign == 0) {
    return LogValue{lhs.sign, std::numeric_limits<double>::infinity()};
  }
  if (lhs.sign == 0) return LogValue::zero();
  return LogValue{lhs.sign * rhs.sign, lhs.log_abs - rhs.log_abs};
}

}  // namespace eulerfact
