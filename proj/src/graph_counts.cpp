#include "mapasym/graph_counts.hpp"

#include <string>

#include "mapasym/errors.hpp"
#include "mapasym/root_finding.hpp"

namespace mapasym {

namespace {

void require_unit(const Real& t) {
  if (!(t > 0L) || !(t < 1L)) {
    throw DomainError("network functions require 0 < t < 1, got " + t.to_string(12));
  }
}

Real sqr(const Real& x) { return x * x; }

/// Horner evaluation with integer coefficients, constant term first.
template <std::size_t N>
Real poly(const Real& t, const long (&c)[N]) {
  Real acc(c[N - 1], t.precision());
  for (std::size_t i = N - 1; i-- > 0;) acc = acc * t + c[i];
  return acc;
}

}  // namespace

Real network_alpha(const Real& t) {
  require_unit(t);
  static constexpr long c[] = {144, 592, 664, 135, 6, -5};
  return poly(t, c);
}

Real network_beta(const Real& t) {
  require_unit(t);
  static constexpr long c[] = {400, 1808, 2527, 1155, 237, 17};
  return 3L * t * (1L + t) * poly(t, c);
}

Real network_gamma(const Real& t) {
  require_unit(t);
  static constexpr long c[] = {1296, 10272, 30920, 42526, 23135, -1482, -4650, -1358, -405, -30};
  return poly(t, c);
}

Real network_h(const Real& t) {
  require_unit(t);
  return t * t * (1L - t) * (18L + 36L * t + 5L * t * t) /
         (2L * (3L + t) * (1L + 2L * t) * sqr(1L + 3L * t));
}

Real rho2(const Real& t) {
  require_unit(t);
  return (1L + 3L * t) * pow(1L - t, 3L) / (16L * pow(t, 3L));
}

Real lambda2(const Real& t) {
  require_unit(t);
  return (1L + 2L * t) / ((1L + 3L * t) * (1L - t)) * exp(-network_h(t)) - 1L;
}

Real network_mu(const Real& t) {
  const Real lam = lambda2(t);
  return (1L + t) * sqr(3L + t) * sqr(1L + 2L * t) * sqr(1L + 3L * t) * lam /
         (pow(t, 3L) * (1L + lam) * network_alpha(t));
}

Real network_sigma2(const Real& t) {
  const Real lam = lambda2(t);
  const Real a = network_alpha(t);
  const Real lead = sqr(3L + t) * sqr(1L + 2L * t) * sqr(1L + 3L * t) * lam /
                    (3L * pow(t, 6L) * (1L + t) * sqr(1L + lam) * pow(a, 3L));
  const Real bracket = 3L * pow(t, 3L) * sqr(1L + t) * sqr(a) -
                       (1L - t) * (3L + t) * (1L + 2L * t) * sqr(1L + 3L * t) * lam * network_gamma(t);
  return lead * bracket;
}

NetworkFunctionBundle network_bundle(const Real& t) {
  require_unit(t);
  const Precision prec = t.precision();
  const Real a = network_alpha(t);
  const Real b = network_beta(t);
  return NetworkFunctionBundle{
      .t = t,
      .alpha = a,
      .beta = b,
      .gamma = network_gamma(t),
      .h = network_h(t),
      .rho2 = rho2(t),
      .lambda2 = lambda2(t),
      .mu = network_mu(t),
      .sigma2 = network_sigma2(t),
      .d0 = 3L * t * t / ((1L - t) * (1L + 3L * t)),
      .d1 = -48L * t * t * (1L + t) * sqr(1L + 2L * t) * (18L + 6L * t + t * t) /
            ((1L + 3L * t) * b),
      .d3half = 384L * pow(t, 3L) * sqr(1L + t) * sqr(1L + 2L * t) * sqr(3L + t) *
                pow(a, Real(3L, prec) / 2L) / pow(b, Real(5L, prec) / 2L),
  };
}

Real b_factor(int g, const Real& t) {
  require_unit(t);
  const Precision prec = t.precision();
  const Real base = 8L / (9L * (1L + t) * pow(1L - t, 6L)) *
                    pow(network_beta(t) / network_alpha(t), Real(5L, prec) / 2L);
  return pow(base, static_cast<long>(g) - 1);
}

Real solve_t(const Real& ratio) {
  const Precision prec = ratio.precision();
  if (!(ratio > 1L) || !(ratio < 3L)) {
    throw DomainError("edge density m/n = " + ratio.to_string(10) +
                      " outside the valid interval (1, 3) for 2-connected graphs");
  }
  const auto f = [&](const Real& t) { return network_mu(t) - ratio; };
  const Real edge = exp2i(-40, prec);
  Real lo = Real(1L, prec) / 2L;
  Real hi = lo;
  if (f(lo) > 0L) {
    while (f(lo) > 0L) {
      hi = lo;
      lo = lo / 2L;
      if (lo < edge) {
        throw DomainError("edge density " + ratio.to_string(10) + " too close to 1");
      }
    }
  } else {
    while (f(hi) < 0L) {
      lo = hi;
      hi = 1L - (1L - hi) / 2L;
      if (1L - hi < edge) {
        throw DomainError("edge density " + ratio.to_string(10) + " too close to 3");
      }
    }
  }
  return find_root(f, lo, hi, exp2i(-(prec.bits - 16), prec));
}

Real solve_t_hat(Precision prec) {
  const auto f = [](const Real& t) { return lambda2(t) - 1L; };
  return find_root(f, Real(1L, prec) / 10L, Real(9L, prec) / 10L, exp2i(-(prec.bits - 8), prec));
}

Graph3Estimate graphs_3conn(int g, long n, long m, Precision prec) {
  MapEstimate map = map_estimate(CountQuery{g, MapConnectivity::kThreeConnected, n, m}, prec);
  Real divisor = Real(4L * m, prec);
  LogMagnitude value = map.value / LogMagnitude::from_real(divisor);
  return Graph3Estimate{std::move(map), std::move(divisor), std::move(value)};
}

Graph2Estimate graphs_2conn(int g, long n, long m, Precision prec) {
  if (g < 1) {
    throw NotCoveredError("2-connected graphs by vertices and edges are covered for g >= 1 only");
  }
  if (n <= 0 || m <= 0) throw DomainError("n and m must be positive");
  const Real t = solve_t(Real(m, prec) / Real(n, prec));
  const Real sigma = sqrt(network_sigma2(t));
  const Real b_g = b_factor(g, t);
  const Real amplitude = b_g * compute_t(g, prec) / (4L * sigma * sqrt(2L * pi(prec)));
  const Real n_exponent = Real(5L * g - 8, prec) / 2L;
  const Real r2 = rho2(t);
  const Real l2 = lambda2(t);
  Real log_value = log(amplitude) + n_exponent * log(Real(n, prec)) - Real(n, prec) * log(r2) -
                   Real(m, prec) * log(l2);
  return Graph2Estimate{t, b_g, sigma, amplitude, n_exponent, r2, l2,
                        LogMagnitude::from_log(std::move(log_value))};
}

Real beta3_formula(const Real& r) {
  if (!(r > 0L)) throw DomainError("beta3_formula requires r > 0");
  const Precision prec = r.precision();
  return 2L * sqrt(Real(3L, prec)) * sqr(1L + 2L * r) * pow(1L + r, Real(3L, prec) / 2L) *
         pow(2L + r, Real(5L, prec) / 2L) / pow(r, 6L);
}

GraphConstants constants_chain(Precision prec) {
  GraphConstants c;
  const Real t = solve_t_hat(prec);
  c.t_hat = t;

  c.r3 = sqrt(Real(7L, prec)) / 2L - 1L;
  c.x[3] = rho(c.r3);
  c.beta[3] = beta3_formula(c.r3);
  c.alpha[3] = 1L / (4L * c.beta[3]);

  c.x[2] = rho2(t);
  c.beta[2] = b_factor(2, t);
  c.alpha[2] = 1L / (4L * c.beta[2]);

  const Real a = (3L * t - 1L) * pow(1L + t, 3L) * log(1L + t) / (16L * pow(t, 3L)) +
                 (1L + 3L * t) * pow(1L - t, 3L) * log(1L + 2L * t) / (32L * pow(t, 3L)) +
                 (1L - t) *
                     (185L * pow(t, 4L) + 698L * pow(t, 3L) - 217L * t * t - 160L * t + 6L) /
                     (64L * t * sqr(1L + 3L * t) * (3L + t));
  c.x[1] = sqrt(1L + 3L * t) * pow(1L - t, 3L) / pow(t, 3L) * exp(a) / 16L;

  PlanarExpansion& p = c.planar;
  p.g02_0 = Real::parse("7.397e-4", prec);
  p.g02_1 = c.x[2] * log(c.x[1] / c.x[2]);
  p.g02_2 = Real::parse("7.672e-4", prec);
  p.g01_0 = c.x[2] + p.g02_0 + p.g02_1;
  p.p1 = Real::parse("-0.03979", prec);

  const auto beta1_at = [&](const Real& p1) {
    return pow(-c.x[2] / p1, Real(5L, prec) / 2L) * c.beta[2];
  };
  c.beta[1] = beta1_at(p.p1);
  c.alpha[1] = 1L / (4L * c.beta[1]);

  c.x[0] = c.x[1];
  c.beta[0] = c.beta[1];
  c.alpha[0] = c.alpha[1] * exp(p.g01_0);

  c.r_hat = (1L - t) / (2L * t);
  c.beta3_at_r_hat = beta3_formula(c.r_hat);
  c.p1_derived = -sqr(c.x[2]) / (c.x[2] - 2L * p.g02_2);
  c.beta1_band_lo = beta1_at(Real::parse("-0.039795", prec));
  c.beta1_band_hi = beta1_at(Real::parse("-0.039785", prec));
  return c;
}

ConstantsTable GraphConstants::table() const {
  ConstantsTable out;
  out.set("t_hat", t_hat, Provenance::kRootSolve);
  out.set("x3", x[3], Provenance::kClosedForm);
  out.set("beta3", beta[3], Provenance::kClosedForm);
  out.set("alpha3", alpha[3], Provenance::kClosedForm);
  out.set("x2", x[2], Provenance::kRootSolve);
  out.set("beta2", beta[2], Provenance::kRootSolve);
  out.set("alpha2", alpha[2], Provenance::kRootSolve);
  out.set("x1", x[1], Provenance::kRootSolve);
  out.set("G02_0", planar.g02_0, Provenance::kPaperNumeric);
  out.set("G02_1", planar.g02_1, Provenance::kRootSolve);
  out.set("G02_2", planar.g02_2, Provenance::kPaperNumeric);
  out.set("G01_0", planar.g01_0, Provenance::kPaperNumeric);
  out.set("P1", planar.p1, Provenance::kPaperNumeric);
  out.set("beta1", beta[1], Provenance::kPaperNumeric);
  out.set("alpha1", alpha[1], Provenance::kPaperNumeric);
  out.set("x0", x[0], Provenance::kRootSolve);
  out.set("beta0", beta[0], Provenance::kPaperNumeric);
  out.set("alpha0", alpha[0], Provenance::kPaperNumeric);
  return out;
}

EdgeConcentration graph_edge_concentration(int k, long n, Precision prec) {
  if (n < 1) throw DomainError("n must be positive");
  const Real nn(n, prec);
  if (k == 3) {
    const Real r = concentration_r(MapConnectivity::kThreeConnected, prec);
    return {density_mu(MapConnectivity::kThreeConnected, r) * nn,
            sigma2(MapConnectivity::kThreeConnected, r) * nn};
  }
  if (k == 2) {
    const Real t = solve_t_hat(prec);
    return {network_mu(t) * nn, network_sigma2(t) * nn};
  }
  throw NotCoveredError("edge concentration is implemented for k = 2, 3");
}

VertexEstimate graphs_by_vertices(int g, int k, long n, const GraphConstants& constants) {
  if (g < 0) throw DomainError("genus must be >= 0");
  if (k < 0 || k > 3) throw DomainError("graph connectivity must be 0..3, got " + std::to_string(k));
  if (n < 1) throw DomainError("n must be positive");
  const Precision prec = constants.t_hat.precision();
  const Real lead = constants.alpha[k] * pow(constants.beta[k], static_cast<long>(g)) *
                    compute_t(g, prec);
  Real log_value = log(lead) + Real(5L * g - 7, prec) / 2L * log(Real(n, prec)) -
                   Real(n, prec) * log(constants.x[k]);
  return VertexEstimate{LogMagnitude::from_log(std::move(log_value)), g == 0 && k <= 1};
}

VertexEstimate graphs_by_vertices(int g, int k, long n, Precision prec) {
  return graphs_by_vertices(g, k, n, constants_chain(prec));
}

}  // namespace mapasym
