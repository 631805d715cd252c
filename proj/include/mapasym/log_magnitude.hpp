#pragma once

#include <string>

#include "mapasym/real.hpp"

namespace mapasym {

/// Sign plus natural log of the absolute value. Used for counts such as
/// rho^{-n} eta^{-m} that overflow any fixed-width float.
class LogMagnitude {
 public:
  /// The value zero.
  explicit LogMagnitude(Precision prec = kDefaultPrecision);
  LogMagnitude(int sign, Real log_abs);

  static LogMagnitude from_real(const Real& value);
  /// Positive value e^{log_abs}.
  static LogMagnitude from_log(Real log_abs) { return LogMagnitude(1, std::move(log_abs)); }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }

  /// Natural log of |value|. Precondition: sign() != 0.
  const Real& log_abs() const;
  Real log10_abs() const;

  /// Back to a plain Real; overflows to +-inf when out of MPFR's exponent range.
  Real to_real() const;

  /// Scientific rendering "d.ddddddddde+X" built from the log, valid for any
  /// magnitude.
  std::string to_scientific(int digits = 10) const;

  LogMagnitude operator*(const LogMagnitude& rhs) const;
  LogMagnitude operator/(const LogMagnitude& rhs) const;
  LogMagnitude pow(const Real& exponent) const;

  /// Compares |a| and |b|.
  static int compare_magnitude(const LogMagnitude& a, const LogMagnitude& b);

  friend bool operator==(const LogMagnitude& a, const LogMagnitude& b);

 private:
  int sign_ = 0;
  Real log_abs_;
};

}  // namespace mapasym
