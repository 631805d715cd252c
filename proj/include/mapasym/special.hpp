#pragma once

#include "mapasym/log_magnitude.hpp"
#include "mapasym/real.hpp"

namespace mapasym {

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
Real log_gamma(const Real& x);

/// Gamma(x) as sign and log-magnitude; defined for every x that is not a
/// non-positive integer. Gamma(-1/2) = -2 sqrt(pi) is the case t_0 needs.
LogMagnitude gamma_signed(const Real& x);

/// ln(n!) for n >= 0.
Real log_factorial(long n, Precision prec);

/// ln binom(n, k); throws DomainError when the coefficient is zero.
Real log_binomial(long n, long k, Precision prec);

}  // namespace mapasym
