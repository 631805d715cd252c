#include "mapasym/special.hpp"

#include <string>

#include "mapasym/errors.hpp"

namespace mapasym {

Real log_gamma(const Real& x) {
  if (!(x > 0L)) throw DomainError("log_gamma requires x > 0, got " + x.to_string(12));
  Real out(x.precision());
  mpfr_lngamma(out.get_mut(), x.get(), MPFR_RNDN);
  return out;
}

LogMagnitude gamma_signed(const Real& x) {
  if (mpfr_integer_p(x.get()) && !(x > 0L)) {
    throw DomainError("Gamma has a pole at " + x.to_string(12));
  }
  Real out(x.precision());
  int sign = 0;
  mpfr_lgamma(out.get_mut(), &sign, x.get(), MPFR_RNDN);
  return LogMagnitude(sign, std::move(out));
}

Real log_factorial(long n, Precision prec) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  return log_gamma(Real(n + 1, prec));
}

Real log_binomial(long n, long k, Precision prec) {
  if (k < 0 || n < 0 || k > n) {
    throw DomainError("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") is zero");
  }
  return log_factorial(n, prec) - log_factorial(k, prec) - log_factorial(n - k, prec);
}

}  // namespace mapasym
