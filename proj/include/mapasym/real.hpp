#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace mapasym {

/// Working precision in bits.
struct Precision {
  mpfr_prec_t bits = 256;

  friend constexpr bool operator==(Precision, Precision) = default;
};

inline constexpr Precision kDefaultPrecision{256};

constexpr Precision min_precision(Precision a, Precision b) {
  return a.bits < b.bits ? a : b;
}

/// Arbitrary-precision real backed by MPFR. Every value carries its own
/// precision; binary operations produce a result at the smaller precision of
/// the two operands and round to nearest.
class Real {
 public:
  explicit Real(Precision prec = kDefaultPrecision);
  Real(long value, Precision prec);
  Real(int value, Precision prec) : Real(static_cast<long>(value), prec) {}
  Real(double value, Precision prec);
  Real(const mpz_class& value, Precision prec);
  Real(const mpq_class& value, Precision prec);

  /// Parses a decimal literal such as "0.62637" or "-1.4914e-3".
  static Real parse(std::string_view text, Precision prec);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Precision precision() const { return Precision{mpfr_get_prec(value_)}; }

  /// Re-rounds to a different precision.
  Real with_precision(Precision prec) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }

  /// Decimal rendering in scientific notation with `digits` significant
  /// digits, e.g. "1.128379167e+00".
  std::string to_string(int digits = 30) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get_mut() { return value_; }

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend Real operator+(const Real& a, long b);
  friend Real operator+(long a, const Real& b);
  friend Real operator-(const Real& a, long b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b);
  friend Real operator/(const Real& a, long b);
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

Real pi(Precision prec);

/// 2^e at the given precision.
Real exp2i(long e, Precision prec);

/// Relative difference |a/b - 1|; |a| when b is zero.
Real relative_error(const Real& a, const Real& b);

}  // namespace mapasym
