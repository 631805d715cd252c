#include "mapasym/log_magnitude.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "mapasym/errors.hpp"

namespace mapasym {

LogMagnitude::LogMagnitude(Precision prec) : sign_(0), log_abs_(prec) {}

LogMagnitude::LogMagnitude(int sign, Real log_abs)
    : sign_(sign > 0 ? 1 : (sign < 0 ? -1 : 0)), log_abs_(std::move(log_abs)) {}

LogMagnitude LogMagnitude::from_real(const Real& value) {
  if (value.is_zero()) return LogMagnitude(value.precision());
  return LogMagnitude(value.sign(), log(abs(value)));
}

const Real& LogMagnitude::log_abs() const {
  if (sign_ == 0) throw DomainError("log of zero magnitude");
  return log_abs_;
}

Real LogMagnitude::log10_abs() const { return log_abs() / log(Real(10L, log_abs_.precision())); }

Real LogMagnitude::to_real() const {
  if (sign_ == 0) return Real(log_abs_.precision());
  Real v = exp(log_abs_);
  return sign_ < 0 ? -v : v;
}

std::string LogMagnitude::to_scientific(int digits) const {
  if (sign_ == 0) return "0";
  const Real l10 = log10_abs();
  Real floor_part(l10.precision());
  mpfr_floor(floor_part.get_mut(), l10.get());
  const Real frac = l10 - floor_part;
  const Real mantissa = mapasym::pow(Real(10L, l10.precision()), frac);
  long exponent = mpfr_get_si(floor_part.get(), MPFR_RNDN);
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*Rf", digits - 1, mantissa.get()) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string body(raw);
  mpfr_free_str(raw);
  // Rounding the mantissa may carry into 10.000...
  if (body.rfind("10", 0) == 0) {
    body = digits > 1 ? "1." + std::string(static_cast<std::size_t>(digits - 1), '0') : "1";
    ++exponent;
  }
  char exp_buf[32];
  std::snprintf(exp_buf, sizeof exp_buf, "e%+03ld", exponent);
  return (sign_ < 0 ? "-" : "") + body + exp_buf;
}

LogMagnitude LogMagnitude::operator*(const LogMagnitude& rhs) const {
  if (sign_ == 0 || rhs.sign_ == 0) {
    return LogMagnitude(min_precision(log_abs_.precision(), rhs.log_abs_.precision()));
  }
  return LogMagnitude(sign_ * rhs.sign_, log_abs_ + rhs.log_abs_);
}

LogMagnitude LogMagnitude::operator/(const LogMagnitude& rhs) const {
  if (rhs.sign_ == 0) throw DomainError("division by zero magnitude");
  if (sign_ == 0) return *this;
  return LogMagnitude(sign_ * rhs.sign_, log_abs_ - rhs.log_abs_);
}

LogMagnitude LogMagnitude::pow(const Real& exponent) const {
  if (sign_ < 0) throw DomainError("real power of a negative magnitude");
  if (sign_ == 0) return *this;
  return LogMagnitude(1, log_abs_ * exponent);
}

int LogMagnitude::compare_magnitude(const LogMagnitude& a, const LogMagnitude& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return (a.sign_ != 0) - (b.sign_ != 0);
  const auto c = a.log_abs_ <=> b.log_abs_;
  if (c < 0) return -1;
  if (c > 0) return 1;
  return 0;
}

bool operator==(const LogMagnitude& a, const LogMagnitude& b) {
  if (a.sign_ != b.sign_) return false;
  return a.sign_ == 0 || a.log_abs_ == b.log_abs_;
}

}  // namespace mapasym
