#pragma once

#include "mapasym/log_magnitude.hpp"
#include "mapasym/map_constants.hpp"
#include "mapasym/map_counts.hpp"
#include "mapasym/real.hpp"

namespace mapasym {

/// Planar-network functions of t in (0,1), the parameter of the singular
/// curve for 2-connected graphs (t = 1/(1+2r)).
struct NetworkFunctionBundle {
  Real t;
  Real alpha, beta, gamma, h;
  Real rho2, lambda2, mu, sigma2;
  Real d0, d1, d3half;  ///< singular-expansion coefficients of D at y = lambda2(t)
};

NetworkFunctionBundle network_bundle(const Real& t);

// Individual members of the bundle; all throw DomainError unless 0 < t < 1.
Real network_alpha(const Real& t);
Real network_beta(const Real& t);
Real network_gamma(const Real& t);
Real network_h(const Real& t);
Real rho2(const Real& t);
Real lambda2(const Real& t);
Real network_mu(const Real& t);
Real network_sigma2(const Real& t);

/// B_g(t) = (8 / (9 (1+t) (1-t)^6) (beta/alpha)^{5/2})^{g-1}
Real b_factor(int g, const Real& t);

/// Unique t in (0,1) with mu(t) = ratio. mu increases from 1 to 3 on (0,1);
/// ratios outside (1,3), or so close to an endpoint that t leaves
/// [2^-40, 1 - 2^-40], raise DomainError.
Real solve_t(const Real& ratio);

/// t_hat, the root of lambda2(t) = 1.
Real solve_t_hat(Precision prec = kDefaultPrecision);

/// G_g(n,m;3)/n! ~ M_g(n,m;3) / (4m).
struct Graph3Estimate {
  MapEstimate map;
  Real divisor;  ///< 4m
  LogMagnitude value;
};
Graph3Estimate graphs_3conn(int g, long n, long m, Precision prec = kDefaultPrecision);

/// G_g(n,m;2)/n! ~ B_g(t) t_g / (4 sigma(t) sqrt(2 pi)) n^{5g/2-4} rho2^-n lambda2^-m
struct Graph2Estimate {
  Real t;
  Real b_g;
  Real sigma;
  Real amplitude;  ///< B_g(t) t_g / (4 sigma sqrt(2 pi))
  Real n_exponent;
  Real rho2;
  Real lambda2;
  LogMagnitude value;
};
/// g >= 1. The planar case is not covered (NotCoveredError).
Graph2Estimate graphs_2conn(int g, long n, long m, Precision prec = kDefaultPrecision);

/// Singular-expansion coefficients of G_{0,2} at x2 and of G_{0,1}, P at x1.
struct PlanarExpansion {
  Real g02_0;  ///< printed input
  Real g02_1;  ///< x2 ln(x1/x2)
  Real g02_2;  ///< printed input
  Real g01_0;  ///< x2 + g02_0 + g02_1
  Real p1;     ///< printed input
};

struct GraphConstants {
  Real t_hat;
  Real r3;  ///< sqrt(7)/2 - 1, root of eta_3(r) = 1
  Real x[4];
  Real alpha[4];
  Real beta[4];
  PlanarExpansion planar;

  // Reported alongside the chain, not used by it.
  Real r_hat;           ///< (1 - t_hat) / (2 t_hat)
  Real beta3_at_r_hat;  ///< beta_3 closed form evaluated at r_hat
  Real p1_derived;      ///< -x2^2 / (x2 - 2 G02_2)
  Real beta1_band_lo;   ///< beta_1 at the two ends of P1's printed half-unit band
  Real beta1_band_hi;

  /// Named table with provenance tags.
  ConstantsTable table() const;
};

/// beta_3(r) = 2 sqrt(3) (1+2r)^2 (1+r)^{3/2} (2+r)^{5/2} / r^6
Real beta3_formula(const Real& r);

/// Asymptotic mean and variance of the edge count of a random k-connected
/// labelled graph on n vertices. k = 3 uses eta_3(r) = 1, k = 2 uses
/// lambda2(t_hat) = 1. k = 0, 1 raise NotCoveredError.
struct EdgeConcentration {
  Real mean;
  Real variance;
};
EdgeConcentration graph_edge_concentration(int k, long n, Precision prec = kDefaultPrecision);

/// Full chain x_k, alpha_k, beta_k for k = 0..3.
GraphConstants constants_chain(Precision prec = kDefaultPrecision);

/// G_g(n;k)/n! ~ alpha_k beta_k^g t_g n^{5g/2-7/2} x_k^{-n}, k in 0..3.
struct VertexEstimate {
  LogMagnitude value;
  /// g = 0 with k <= 1: evaluated from the same formula, but the constants
  /// for this case come from external results.
  bool externally_sourced = false;
};
VertexEstimate graphs_by_vertices(int g, int k, long n, const GraphConstants& constants);
VertexEstimate graphs_by_vertices(int g, int k, long n, Precision prec = kDefaultPrecision);

}  // namespace mapasym
