#include "mapasym/real.hpp"

#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <string>

namespace mapasym {

Real::Real(Precision prec) {
  mpfr_init2(value_, prec.bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Precision prec) {
  mpfr_init2(value_, prec.bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(double value, Precision prec) {
  mpfr_init2(value_, prec.bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const mpz_class& value, Precision prec) {
  mpfr_init2(value_, prec.bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& value, Precision prec) {
  mpfr_init2(value_, prec.bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real Real::parse(std::string_view text, Precision prec) {
  Real out(prec);
  const std::string buffer(text);
  char* end = nullptr;
  mpfr_strtofr(out.value_, buffer.c_str(), &end, 10, MPFR_RNDN);
  if (end == buffer.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: '" + buffer + "'");
  }
  return out;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Steal the limbs and leave `other` as a valid minimal-precision zero.
  value_[0] = other.value_[0];
  mpfr_init2(other.value_, MPFR_PREC_MIN);
  mpfr_set_zero(other.value_, 1);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_precision(Precision prec) const {
  Real out(prec);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

std::string Real::to_string(int digits) const {
  if (digits < 1) digits = 1;
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*Re", digits - 1, value_) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::unique_ptr<char, decltype(&mpfr_free_str)> guard(raw, &mpfr_free_str);
  return std::string(raw);
}

Real Real::operator-() const {
  Real out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

namespace {

template <typename Op>
Real binary(const Real& a, const Real& b, Op op) {
  Real out(min_precision(a.precision(), b.precision()));
  op(out.get_mut(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

template <typename Op>
Real unary(const Real& a, Op op) {
  Real out(a.precision());
  op(out.get_mut(), a.get(), MPFR_RNDN);
  return out;
}

}  // namespace

Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }

Real operator+(const Real& a, long b) {
  Real out(a.precision());
  mpfr_add_si(out.get_mut(), a.get(), b, MPFR_RNDN);
  return out;
}
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(const Real& a, long b) {
  Real out(a.precision());
  mpfr_sub_si(out.get_mut(), a.get(), b, MPFR_RNDN);
  return out;
}
Real operator-(long a, const Real& b) {
  Real out(b.precision());
  mpfr_si_sub(out.get_mut(), a, b.get(), MPFR_RNDN);
  return out;
}
Real operator*(const Real& a, long b) {
  Real out(a.precision());
  mpfr_mul_si(out.get_mut(), a.get(), b, MPFR_RNDN);
  return out;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(const Real& a, long b) {
  Real out(a.precision());
  mpfr_div_si(out.get_mut(), a.get(), b, MPFR_RNDN);
  return out;
}
Real operator/(long a, const Real& b) {
  Real out(b.precision());
  mpfr_si_div(out.get_mut(), a, b.get(), MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log10(const Real& x) { return unary(x, mpfr_log10); }
Real pow(const Real& base, const Real& exponent) { return binary(base, exponent, mpfr_pow); }

Real pow(const Real& base, long exponent) {
  Real out(base.precision());
  mpfr_pow_si(out.get_mut(), base.get(), exponent, MPFR_RNDN);
  return out;
}

Real min(const Real& a, const Real& b) { return binary(a, b, mpfr_min); }
Real max(const Real& a, const Real& b) { return binary(a, b, mpfr_max); }

Real pi(Precision prec) {
  Real out(prec);
  mpfr_const_pi(out.get_mut(), MPFR_RNDN);
  return out;
}

Real exp2i(long e, Precision prec) {
  Real out(1L, prec);
  mpfr_mul_2si(out.get_mut(), out.get(), e, MPFR_RNDN);
  return out;
}

Real relative_error(const Real& a, const Real& b) {
  if (b.is_zero()) return abs(a);
  return abs(a / b - 1);
}

}  // namespace mapasym
