#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mapasym/real.hpp"

namespace mapasym {

/// Connectivity class of a rooted map.
enum class MapConnectivity : int {
  kConnected = 1,
  kTwoConnected = 2,
  kThreeConnected = 3,
};

/// Validates k in {1,2,3}.
MapConnectivity map_connectivity(int k);
inline int as_int(MapConnectivity k) { return static_cast<int>(k); }

// Functions of the singular-curve parameter r (with s = 1/r). All throw
// DomainError for r <= 0.

/// rho(r) = r^3 (2+r) / (1+2r): the vertex singularity on the curve rs = 1.
Real rho(const Real& r);

/// eta_k(r): edge singularity for k-connected maps.
///   eta_1 = (1+2r) / (4 (1+r+r^2)^2)
///   eta_2 = 4 / ((1+2r)(2+r)^2)
///   eta_3 = 3 / (4 r (2+r))
Real eta(MapConnectivity k, const Real& r);

/// C_k(r), the connectivity-dependent amplitude.
Real amplitude_c(MapConnectivity k, const Real& r);

/// A_g(r) = 1/(2 sqrt pi) r^6 (2+r)^{3/2} / (1+2r)^2
///          * (12 (1+r)^3 (1+2r)^4 / (r^12 (2+r)^5))^{g/2} t_g.
Real amplitude_a(int g, const Real& r, const Real& t_g);

/// Factors of t_g(r) = c(r) d(r)^g t_g.
Real c_factor(const Real& r);
Real d_factor(const Real& r);
Real tg_of_r(int g, const Real& r, const Real& t_g);

/// |A_g(r) recomposed from t_g(r) / A_g(r) closed form - 1|, maximized over
/// the two printed forms of the composition (the eta_1/C_1 form and the
/// expanded power form).
Real consistency_check_ag(int g, const Real& r, const Real& t_g);

/// Edge density m/n as a function of r; strictly decreasing on (0, inf).
///   k=1: (1+r)(1+r+r^2) / (r^2 (2+r))
///   k=2: (1+r) / r
///   k=3: 3 (1+r) / (1+2r)
Real density_mu(MapConnectivity k, const Real& r);
Real density_mu_derivative(MapConnectivity k, const Real& r);

/// Open interval of attainable densities: (1, inf) for k = 1, 2 and (3/2, 3)
/// for k = 3. `upper` is empty when unbounded.
struct DensityInterval {
  Real lower;
  std::optional<Real> upper;

  bool contains(const Real& ratio) const;
  std::string describe() const;
};
DensityInterval density_interval(MapConnectivity k, Precision prec);

/// Unique r > 0 with density_mu(k, r) = ratio. Closed forms for k = 2, 3;
/// bracketed root solve for k = 1. Endpoints are rejected with DomainError.
Real solve_r(MapConnectivity k, const Real& ratio);

/// sigma_k^2(r) = d mu_k / d log eta_k = -d^2 log rho / (d log eta_k)^2.
Real sigma2(MapConnectivity k, const Real& r);

/// Point of the (r, s) parametrization, r, s > 0.
struct RSPoint {
  Real r;
  Real s;
};

Real x_of(const RSPoint& p);        ///< r(2+r) / (s(2+s))
Real y_of(const RSPoint& p);        ///< s(2+s) / (4 (1+r+s)^2)
Real q0_of(const RSPoint& p);       ///< (2r+2s-rs) / ((2+r)(2+s))
Real y_hat_of(const RSPoint& p);    ///< 4s / ((2+s)(2+r)^2)
Real y_star_of(const RSPoint& p);   ///< s(4-rs) / (4(2+r))
Real dy_dx_at_fixed_y_hat(const RSPoint& p);  ///< -s^2 (2+s)^2 / (4 (2+r) (1+r+s)^3)

/// Solves x(r,s) = x, y_hat(r,s) = y_hat by 2-d Newton from `seed`.
RSPoint solve_rs_from_x_y_hat(const Real& x, const Real& y_hat, const RSPoint& seed);

struct QuadIdentityReport {
  /// y (1+Q_0)^2 - 4s / ((2+s)(2+r)^2)
  Real y_hat_residual;
  /// (Q_0 - x y_hat - y_hat) / (x y_hat) - s(4-rs) / (4(2+r))
  Real y_star_residual;
  Real dydx_analytic;
  /// Empty on the fold rs = 1, where (x, y_hat) does not determine (r, s).
  std::optional<Real> dydx_finite_difference;
  /// |analytic - centered difference| at step h
  std::optional<Real> dydx_residual;
  /// Largest relative residual of the four partials dr/dx, dr/dy, ds/dx,
  /// ds/dy against the inverse of the forward Jacobian; empty when rs = 1.
  std::optional<Real> jacobian_residual;
};

QuadIdentityReport quad_identities(const RSPoint& point, const Real& h);

/// dy/dx residuals for h0, h0/2, ..., h0/2^halvings.
std::vector<Real> dydx_residual_sequence(const RSPoint& point, const Real& h0, int halvings);

enum class QuadVariant { kAll, kNoTwoCycle, kNearSimple };

/// Singular-expansion amplitude C(r) of x q(x,y) ~ C(r) (1 - x/rho)^{(3-5g)/2}
/// for g >= 1.
Real quad_amplitude(QuadVariant variant, int g, const Real& r, const Real& t_g);

/// Every r-dependent function for one (k, g).
struct MapFunctionBundle {
  MapConnectivity k;
  int g;
  Real r, rho, eta, c, a, sigma2, mu;
};

MapFunctionBundle map_bundle(MapConnectivity k, int g, const Real& r, const Real& t_g);

}  // namespace mapasym
