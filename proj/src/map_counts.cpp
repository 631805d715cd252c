#include "mapasym/map_counts.hpp"

#include <stdexcept>
#include <string>

#include "mapasym/errors.hpp"
#include "mapasym/map_constants.hpp"
#include "mapasym/root_finding.hpp"
#include "mapasym/special.hpp"

namespace mapasym {

LogMagnitude AsymptoticEstimate::evaluate(long n, long m) const {
  if (n <= 0 || m <= 0) throw DomainError("evaluate requires n, m >= 1");
  const Precision prec = r.precision();
  Real log_value = log(amplitude * extra_factor);
  log_value += n_exponent * log(Real(n, prec));
  log_value += Real(n, prec) * log(per_vertex_base);
  log_value += Real(m, prec) * log(per_edge_base);
  return LogMagnitude::from_log(std::move(log_value));
}

MapEstimate map_estimate(const CountQuery& q, const Real& t_g) {
  if (q.g < 0) throw DomainError("genus must be >= 0");
  if (q.n <= 0 || q.m <= 0) throw DomainError("n and m must be positive");
  const Precision prec = t_g.precision();
  const Real ratio = Real(q.m, prec) / Real(q.n, prec);
  const Real r = solve_r(q.k, ratio);

  AsymptoticEstimate est{
      .g = q.g,
      .k = q.k,
      .r = r,
      .amplitude = amplitude_c(q.k, r) * amplitude_a(q.g, r, t_g),
      .n_exponent = Real(5L * q.g - 6, prec) / 2L,
      .per_vertex_base = 1L / rho(r),
      .per_edge_base = 1L / eta(q.k, r),
      .extra_factor = pow(2L + r, Real((as_int(q.k) - 1L) * (5L * q.g - 3), prec) / 2L),
  };
  LogMagnitude value = est.evaluate(q.n, q.m);
  return MapEstimate{std::move(est), std::move(value)};
}

MapEstimate map_estimate(const CountQuery& q, Precision prec) {
  if (q.g < 0) throw DomainError("genus must be >= 0");
  return map_estimate(q, compute_t(q.g, prec));
}

Real concentration_r(MapConnectivity k, Precision prec) {
  if (k != MapConnectivity::kThreeConnected) {
    throw DomainError("eta_" + std::to_string(as_int(k)) +
                      "(r) = 1 has no solution with r > 0; edge counts of maps with "
                      "multiple edges are not concentrated at fixed n");
  }
  const auto f = [k](const Real& r) { return eta(k, r) - 1L; };
  const auto df = [](const Real& r) {
    // d/dr 3 / (4 r (2+r))
    const Real q = r * (2L + r);
    return -3L * (2L + 2L * r) / (4L * q * q);
  };
  const Real lo = Real(1L, prec) / 10L;
  const Real hi(1L, prec);
  return find_root(f, lo, hi, exp2i(-(prec.bits - 8), prec), df);
}

Real mean_edges(int g, MapConnectivity k, long n, Precision prec) {
  if (g < 0 || n <= 0) throw DomainError("mean_edges requires g >= 0 and n >= 1");
  return density_mu(k, concentration_r(k, prec)) * Real(n, prec);
}

Real edge_variance(int g, MapConnectivity k, long n, Precision prec) {
  if (g < 0 || n <= 0) throw DomainError("edge_variance requires g >= 0 and n >= 1");
  return sigma2(k, concentration_r(k, prec)) * Real(n, prec);
}

namespace {

mpz_class factorial(long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

void require_ij(long i, long j) {
  if (i < 1 || j < 1) throw DomainError("planar map formulas require i, j >= 1");
}

}  // namespace

mpz_class exact_2conn_planar(long i, long j) {
  require_ij(i, j);
  const mpz_class num = factorial(2 * i + j - 2) * factorial(2 * j + i - 2);
  const mpz_class den = factorial(i) * factorial(j) * factorial(2 * i - 1) * factorial(2 * j - 1);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("2-connected planar formula not integral at (" + std::to_string(i) +
                           ", " + std::to_string(j) + ")");
  }
  return num / den;
}

Real log_exact_2conn_planar(long i, long j, Precision prec) {
  require_ij(i, j);
  return log_factorial(2 * i + j - 2, prec) + log_factorial(2 * j + i - 2, prec) -
         log_factorial(i, prec) - log_factorial(j, prec) - log_factorial(2 * i - 1, prec) -
         log_factorial(2 * j - 1, prec);
}

LogMagnitude exact_3conn_planar_asym(long i, long j, Precision prec) {
  require_ij(i, j);
  if (j + 3 > 2 * i || i + 3 > 2 * j) return LogMagnitude(prec);
  const Real value = log_binomial(2 * i, j + 3, prec) + log_binomial(2 * j, i + 3, prec) -
                     log(Real(243L * i * j, prec));
  return LogMagnitude::from_log(value);
}

G0ConsistencyReport g0_consistency(MapConnectivity k, long i_max, long step, Precision prec) {
  if (k == MapConnectivity::kConnected) {
    throw DomainError("g0_consistency covers k = 2 and k = 3 only");
  }
  if (step < 2 || i_max < step) throw DomainError("g0_consistency requires i_max >= step >= 2");
  G0ConsistencyReport report{.k = k, .rows = {}, .decreasing = true};
  const Real t0 = compute_t(0, prec);
  for (long i = step; i <= i_max; i += step) {
    const long n = i + 1;
    const long m = 2 * i;
    Real log_exact = k == MapConnectivity::kTwoConnected
                         ? log_exact_2conn_planar(i, i, prec)
                         : exact_3conn_planar_asym(i, i, prec).log_abs();
    Real log_asym = map_estimate(CountQuery{0, k, n, m}, t0).value.log_abs();
    Real ratio = exp(log_exact - log_asym);
    Real deviation = abs(ratio - 1L);
    if (!report.rows.empty() && !(deviation < report.rows.back().deviation)) {
      report.decreasing = false;
    }
    report.rows.push_back(G0ConsistencyRow{i, n, m, std::move(log_exact), std::move(log_asym),
                                           std::move(ratio), std::move(deviation)});
  }
  return report;
}

}  // namespace mapasym
