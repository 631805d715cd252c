#include "mapasym/parametric.hpp"

#include <string>

#include "mapasym/errors.hpp"
#include "mapasym/root_finding.hpp"
#include "mapasym/special.hpp"

namespace mapasym {

namespace {

void require_positive(const Real& r, const char* what) {
  if (!(r > 0L)) throw DomainError(std::string(what) + " requires r > 0, got " + r.to_string(12));
}

/// p/q as a Real exponent; all exponents used here are dyadic, hence exact.
Real frac(long p, long q, Precision prec) { return Real(p, prec) / q; }

Real sqr(const Real& x) { return x * x; }

}  // namespace

MapConnectivity map_connectivity(int k) {
  if (k < 1 || k > 3) {
    throw DomainError("map connectivity must be 1, 2 or 3, got " + std::to_string(k));
  }
  return static_cast<MapConnectivity>(k);
}

Real rho(const Real& r) {
  require_positive(r, "rho");
  return pow(r, 3L) * (2L + r) / (1L + 2L * r);
}

Real eta(MapConnectivity k, const Real& r) {
  require_positive(r, "eta");
  switch (k) {
    case MapConnectivity::kConnected: return (1L + 2L * r) / (4L * sqr(1L + r + r * r));
    case MapConnectivity::kTwoConnected: return 4L / ((1L + 2L * r) * sqr(2L + r));
    case MapConnectivity::kThreeConnected: return 3L / (4L * r * (2L + r));
  }
  throw DomainError("invalid connectivity");
}

Real amplitude_c(MapConnectivity k, const Real& r) {
  require_positive(r, "amplitude_c");
  switch (k) {
    case MapConnectivity::kConnected:
      return (2L + r) * sqrt((1L + r + r * r) / ((1L + 2L * r) * (4L + 7L * r + 4L * r * r)));
    case MapConnectivity::kTwoConnected: return 1L / sqrt((1L + 2L * r) * (2L + r));
    case MapConnectivity::kThreeConnected: return 1L / sqrt(r * pow(2L + r, 3L));
  }
  throw DomainError("invalid connectivity");
}

Real amplitude_a(int g, const Real& r, const Real& t_g) {
  require_positive(r, "amplitude_a");
  if (g < 0) throw DomainError("genus must be >= 0");
  const Precision prec = r.precision();
  const Real lead = pow(r, 6L) * pow(2L + r, frac(3, 2, prec)) / (2L * sqrt(pi(prec)) * sqr(1L + 2L * r));
  const Real base =
      12L * pow(1L + r, 3L) * pow(1L + 2L * r, 4L) / (pow(r, 12L) * pow(2L + r, 5L));
  return lead * pow(base, frac(g, 2, prec)) * t_g;
}

Real c_factor(const Real& r) {
  require_positive(r, "c_factor");
  const Precision prec = r.precision();
  const Real q = 1L + r + r * r;
  return pow(r, 3L) * (1L + 2L * r) * (2L + r) /
         (32L * sqrt(pi(prec)) * sqrt(4L + 7L * r + 4L * r * r) * pow(q, frac(7, 2, prec)));
}

Real d_factor(const Real& r) {
  require_positive(r, "d_factor");
  const Precision prec = r.precision();
  const Real q = 1L + r + r * r;
  return 32L * sqrt(Real(3L, prec)) * pow(q, 4L) * pow(1L + r, frac(3, 2, prec)) /
         (pow(r, frac(7, 2, prec)) * pow(2L + r, frac(5, 4, prec)) *
          pow(1L + 2L * r, frac(5, 4, prec)));
}

Real tg_of_r(int g, const Real& r, const Real& t_g) {
  if (g < 0) throw DomainError("genus must be >= 0");
  return c_factor(r) * pow(d_factor(r), static_cast<long>(g)) * t_g;
}

Real consistency_check_ag(int g, const Real& r, const Real& t_g) {
  const Precision prec = r.precision();
  const Real closed = amplitude_a(g, r, t_g);
  const Real tgr = tg_of_r(g, r, t_g);

  // A_g = eta_1^{2g-2} / C_1 * ((1+2r) / (r^2 (2+r)))^{5g/4 - 3/2} t_g(r)
  const Real via_eta = pow(eta(MapConnectivity::kConnected, r), 2L * g - 2) /
                       amplitude_c(MapConnectivity::kConnected, r) *
                       pow((1L + 2L * r) / (r * r * (2L + r)), frac(5L * g - 6, 4, prec)) * tgr;

  // Expanded form of the same expression.
  const Real q = 1L + r + r * r;
  const Real lead = 16L * pow(r, 3L) * sqrt(2L + r) * pow(q, frac(7, 2, prec)) *
                    sqrt(4L + 7L * r + 4L * r * r) / pow(1L + 2L * r, 3L);
  const Real base = pow(1L + 2L * r, frac(13, 2, prec)) /
                    (256L * pow(r, 5L) * pow(q, 8L) * pow(2L + r, frac(5, 2, prec)));
  const Real expanded = lead * pow(base, frac(g, 2, prec)) * tgr;

  return max(relative_error(via_eta, closed), relative_error(expanded, closed));
}

Real density_mu(MapConnectivity k, const Real& r) {
  require_positive(r, "density_mu");
  switch (k) {
    case MapConnectivity::kConnected: return (1L + r) * (1L + r + r * r) / (r * r * (2L + r));
    case MapConnectivity::kTwoConnected: return (1L + r) / r;
    case MapConnectivity::kThreeConnected: return 3L * (1L + r) / (1L + 2L * r);
  }
  throw DomainError("invalid connectivity");
}

Real density_mu_derivative(MapConnectivity k, const Real& r) {
  require_positive(r, "density_mu_derivative");
  switch (k) {
    case MapConnectivity::kConnected: {
      // N/D with N = 1 + 2r + 2r^2 + r^3, D = 2r^2 + r^3.
      const Real n = 1L + 2L * r + 2L * r * r + pow(r, 3L);
      const Real dn = 2L + 4L * r + 3L * r * r;
      const Real d = 2L * r * r + pow(r, 3L);
      const Real dd = 4L * r + 3L * r * r;
      return (dn * d - n * dd) / (d * d);
    }
    case MapConnectivity::kTwoConnected: return -1L / (r * r);
    case MapConnectivity::kThreeConnected: return -3L / sqr(1L + 2L * r);
  }
  throw DomainError("invalid connectivity");
}

bool DensityInterval::contains(const Real& ratio) const {
  if (!(ratio > lower)) return false;
  return !upper || ratio < *upper;
}

std::string DensityInterval::describe() const {
  return "(" + lower.to_string(6) + ", " + (upper ? upper->to_string(6) : std::string("inf")) + ")";
}

DensityInterval density_interval(MapConnectivity k, Precision prec) {
  if (k == MapConnectivity::kThreeConnected) {
    return {frac(3, 2, prec), Real(3L, prec)};
  }
  return {Real(1L, prec), std::nullopt};
}

Real solve_r(MapConnectivity k, const Real& ratio) {
  const Precision prec = ratio.precision();
  const DensityInterval interval = density_interval(k, prec);
  if (!interval.contains(ratio)) {
    throw DomainError("edge density m/n = " + ratio.to_string(10) + " outside the valid interval " +
                      interval.describe() + " for k = " + std::to_string(as_int(k)));
  }
  switch (k) {
    case MapConnectivity::kTwoConnected: return 1L / (ratio - 1L);
    case MapConnectivity::kThreeConnected: return (3L - ratio) / (2L * ratio - 3L);
    case MapConnectivity::kConnected: break;
  }

  // density_mu(1, .) decreases from +inf to 1; grow a geometric bracket.
  const auto f = [&](const Real& r) { return density_mu(k, r) - ratio; };
  const auto df = [&](const Real& r) { return density_mu_derivative(k, r); };
  Real lo(1L, prec);
  Real hi(2L, prec);
  if (f(lo) < 0L) {
    for (int i = 0; f(lo) < 0L; ++i) {
      if (i > 4 * prec.bits) throw ConvergenceError("solve_r: could not bracket the root");
      hi = lo;
      lo = lo / 2L;
    }
  } else {
    for (int i = 0; f(hi) > 0L; ++i) {
      if (i > 4 * prec.bits) throw ConvergenceError("solve_r: could not bracket the root");
      lo = hi;
      hi = hi * 2L;
    }
  }
  const Real tol = lo * exp2i(-(prec.bits - 8), prec);
  return find_root(f, lo, hi, tol, df);
}

Real sigma2(MapConnectivity k, const Real& r) {
  require_positive(r, "sigma2");
  switch (k) {
    case MapConnectivity::kConnected:
      return (4L + 7L * r + 4L * r * r) * (1L + 2L * r) * (1L + r + r * r) /
             (6L * pow(r, 4L) * sqr(2L + r) * (1L + r));
    case MapConnectivity::kTwoConnected:
      return (2L + r) * (1L + 2L * r) / (6L * r * r * (1L + r));
    case MapConnectivity::kThreeConnected:
      return 3L * r * (2L + r) / (2L * (1L + r) * sqr(1L + 2L * r));
  }
  throw DomainError("invalid connectivity");
}

namespace {

void require_rs(const RSPoint& p) {
  if (!(p.r > 0L) || !(p.s > 0L)) {
    throw DomainError("(r, s) parametrization requires r, s > 0");
  }
}

}  // namespace

Real x_of(const RSPoint& p) {
  require_rs(p);
  return p.r * (2L + p.r) / (p.s * (2L + p.s));
}

Real y_of(const RSPoint& p) {
  require_rs(p);
  return p.s * (2L + p.s) / (4L * sqr(1L + p.r + p.s));
}

Real q0_of(const RSPoint& p) {
  require_rs(p);
  return (2L * p.r + 2L * p.s - p.r * p.s) / ((2L + p.r) * (2L + p.s));
}

Real y_hat_of(const RSPoint& p) {
  require_rs(p);
  return 4L * p.s / ((2L + p.s) * sqr(2L + p.r));
}

Real y_star_of(const RSPoint& p) {
  require_rs(p);
  return p.s * (4L - p.r * p.s) / (4L * (2L + p.r));
}

Real dy_dx_at_fixed_y_hat(const RSPoint& p) {
  require_rs(p);
  return -sqr(p.s) * sqr(2L + p.s) / (4L * (2L + p.r) * pow(1L + p.r + p.s, 3L));
}

namespace {

// With y_hat fixed, s/(2+s) = y_hat (2+r)^2 / 4, so s is an increasing
// function of r on (0, 2/sqrt(y_hat) - 2). Along that curve r s crosses 1
// exactly once and x is monotone on either side of the crossing.
RSPoint solve_rs_on_branch(const Real& x, const Real& y_hat, int side, Precision prec) {
  const Real r_max = 2L / sqrt(y_hat) - 2L;
  if (!(r_max > 0L)) throw ConvergenceError("solve_rs: y_hat out of range");
  const auto s_of = [&](const Real& r) {
    const Real u = y_hat * sqr(2L + r) / 4L;
    return 2L * u / (1L - u);
  };
  const Real tol = r_max * exp2i(-(prec.bits - 4), prec);
  const Real lo = r_max * exp2i(-(prec.bits / 2), prec);
  const Real hi = r_max * (1L - exp2i(-(prec.bits / 2), prec));
  try {
    const Real r_fold =
        find_root([&](const Real& r) { return 1L - r * s_of(r); }, lo, hi, tol);
    const auto f = [&](const Real& r) { return x_of({r, s_of(r)}) - x; };
    const Real r = side > 0 ? find_root(f, lo, r_fold, tol) : find_root(f, r_fold, hi, tol);
    return RSPoint{r, s_of(r)};
  } catch (const BracketError&) {
    throw ConvergenceError("solve_rs: no preimage on this side of rs = 1");
  }
}

}  // namespace

RSPoint solve_rs_from_x_y_hat(const Real& x, const Real& y_hat, const RSPoint& seed) {
  require_rs(seed);
  const Precision prec = min_precision(seed.r.precision(), seed.s.precision());
  // The map (r, s) -> (x, y_hat) folds along rs = 1; stay on the seed's side.
  const int side = (1L - seed.r * seed.s).sign();
  if (side == 0) throw ConvergenceError("solve_rs: seed lies on the fold rs = 1");
  // Near the fold the last bits of a Newton step are noise, so stop one step
  // after reaching half precision.
  const Real eps = exp2i(-(prec.bits / 2), prec);
  bool polished = false;
  RSPoint p = seed;
  for (int iter = 0; iter < 200; ++iter) {
    const Real& r = p.r;
    const Real& s = p.s;
    const Real fx = x_of(p) - x;
    const Real fy = y_hat_of(p) - y_hat;
    // Partials of x and y_hat with respect to r and s.
    const Real xr = 2L * (1L + r) / (s * (2L + s));
    const Real xs = -2L * r * (2L + r) * (1L + s) / sqr(s * (2L + s));
    const Real yr = -8L * s / ((2L + s) * pow(2L + r, 3L));
    const Real ys = 8L / (sqr(2L + r) * sqr(2L + s));
    const Real det = xr * ys - xs * yr;
    if (det.is_zero()) break;
    const Real dr = (fx * ys - fy * xs) / det;
    const Real ds = (xr * fy - yr * fx) / det;
    const RSPoint next{r - dr, s - ds};
    if (!(next.r > 0L) || !(next.s > 0L) || (1L - next.r * next.s).sign() != side) break;
    p = next;
    if (abs(dr) <= eps * p.r && abs(ds) <= eps * p.s) {
      if (polished) return p;
      polished = true;
    }
  }
  return solve_rs_on_branch(x, y_hat, side, prec);
}

QuadIdentityReport quad_identities(const RSPoint& point, const Real& h) {
  require_rs(point);
  const Real& r = point.r;
  const Real& s = point.s;
  const Real x = x_of(point);
  const Real y = y_of(point);
  const Real q0 = q0_of(point);
  const Real y_hat = y_hat_of(point);

  QuadIdentityReport out{
      .y_hat_residual = y * sqr(1L + q0) - y_hat,
      // Q_hat_0(x, y_hat) = Q_0(x, y).
      .y_star_residual = (q0 - x * y_hat - y_hat) / (x * y_hat) - y_star_of(point),
      .dydx_analytic = dy_dx_at_fixed_y_hat(point),
      .dydx_finite_difference = std::nullopt,
      .dydx_residual = std::nullopt,
      .jacobian_residual = std::nullopt,
  };

  const Real one_minus_rs = 1L - r * s;
  try {
    const RSPoint plus = solve_rs_from_x_y_hat(x + h, y_hat, point);
    const RSPoint minus = solve_rs_from_x_y_hat(x - h, y_hat, point);
    const Real fd = (y_of(plus) - y_of(minus)) / (2L * h);
    out.dydx_finite_difference = fd;
    out.dydx_residual = abs(fd - out.dydx_analytic);
  } catch (const ConvergenceError&) {
    // Within h of the fold one side has no preimage.
  }

  if (!one_minus_rs.is_zero()) {
    const Real xr = 2L * (1L + r) / (s * (2L + s));
    const Real xs = -2L * r * (2L + r) * (1L + s) / sqr(s * (2L + s));
    const Real yr = -s * (2L + s) / (2L * pow(1L + r + s, 3L));
    const Real ys = (1L + r + r * s) / (2L * pow(1L + r + s, 3L));
    const Real det = xr * ys - xs * yr;
    const Real cube = pow(1L + r + s, 3L);
    const Real printed[4] = {
        s * (2L + s) * (1L + r + r * s) / (2L * one_minus_rs),
        2L * r * (2L + r) * (1L + s) * cube / (s * (2L + s) * one_minus_rs),
        sqr(s) * sqr(2L + s) / (2L * one_minus_rs),
        2L * (1L + r) * cube / one_minus_rs,
    };
    const Real inverse[4] = {ys / det, -xs / det, -yr / det, xr / det};
    Real worst(r.precision());
    for (int i = 0; i < 4; ++i) worst = max(worst, relative_error(inverse[i], printed[i]));
    out.jacobian_residual = worst;
  }
  return out;
}

std::vector<Real> dydx_residual_sequence(const RSPoint& point, const Real& h0, int halvings) {
  std::vector<Real> out;
  Real h = h0;
  for (int i = 0; i <= halvings; ++i) {
    const auto rep = quad_identities(point, h);
    if (!rep.dydx_residual) throw ConvergenceError("dydx_residual_sequence: point too close to rs = 1");
    out.push_back(*rep.dydx_residual);
    h = h / 2L;
  }
  return out;
}

Real quad_amplitude(QuadVariant variant, int g, const Real& r, const Real& t_g) {
  require_positive(r, "quad_amplitude");
  if (g < 1) throw DomainError("quad_amplitude requires g >= 1");
  const Precision prec = r.precision();
  const Real a = amplitude_a(g, r, t_g);
  const Real gamma = exp(log_gamma(frac(5L * g - 3, 2, prec)));
  const Real pi_v = pi(prec);
  switch (variant) {
    case QuadVariant::kAll:
      return sqrt(pi_v / (3L * (1L + r))) * (1L + r + r * r) * a * gamma / (r * r);
    case QuadVariant::kNoTwoCycle:
      return sqrt(pi_v / (3L * (1L + r))) * a * gamma / r * pow(2L + r, frac(5L * g - 3, 2, prec));
    case QuadVariant::kNearSimple:
      return sqrt(3L * pi_v / (1L + r)) * a * gamma / ((2L + r) * (1L + 2L * r)) *
             pow(2L + r, 5L * g - 3);
  }
  throw DomainError("invalid quadrangulation variant");
}

MapFunctionBundle map_bundle(MapConnectivity k, int g, const Real& r, const Real& t_g) {
  return MapFunctionBundle{
      .k = k,
      .g = g,
      .r = r,
      .rho = rho(r),
      .eta = eta(k, r),
      .c = amplitude_c(k, r),
      .a = amplitude_a(g, r, t_g),
      .sigma2 = sigma2(k, r),
      .mu = density_mu(k, r),
  };
}

}  // namespace mapasym
