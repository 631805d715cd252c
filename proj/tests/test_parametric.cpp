#include <gtest/gtest.h>

#include <random>

#include "mapasym/errors.hpp"
#include "mapasym/map_constants.hpp"
#include "mapasym/parametric.hpp"

using namespace mapasym;

namespace {

constexpr Precision kP{256};
// Finite-difference oracles run at twice the working precision.
constexpr Precision kHi{512};
const MapConnectivity kAllK[] = {MapConnectivity::kConnected, MapConnectivity::kTwoConnected,
                                 MapConnectivity::kThreeConnected};

Real R(const char* s) { return Real::parse(s, kP); }
Real Q(long p, long q) { return Real(mpq_class(p, q), kP); }

void expect_close(const Real& got, const Real& want, long bits = 240) {
  EXPECT_LT(relative_error(got, want), exp2i(-bits, kP))
      << got.to_string(30) << " vs " << want.to_string(30);
}

Real r_star3() { return sqrt(Real(7L, kP)) / 2L - 1L; }

// Centered difference of F along log eta_k, parametrized by r.
template <typename F>
Real d_dlog_eta(MapConnectivity k, const Real& r, F f) {
  const Real x = r.with_precision(kHi);
  const Real h = Real::parse("1e-40", kHi);
  const Real num = f(x + h) - f(x - h);
  const Real den = log(eta(k, x + h)) - log(eta(k, x - h));
  return num / den;
}

}  // namespace

TEST(Rho, Examples) {
  EXPECT_EQ(rho(Real(1L, kP)), 1L);
  expect_close(rho(Real(2L, kP)), R("6.4"));
  expect_close(rho(r_star3()), (7L * sqrt(Real(7L, kP)) - 17L) / 32L, 236);
  EXPECT_NEAR(rho(r_star3()).to_double(), 0.04751, 0.000005);
  EXPECT_THROW(rho(Real(0L, kP)), DomainError);
  EXPECT_THROW(rho(R("-1")), DomainError);
}

TEST(Eta, Examples) {
  const Real one(1L, kP);
  expect_close(eta(MapConnectivity::kTwoConnected, one), Q(4, 27));
  expect_close(eta(MapConnectivity::kConnected, one), Q(1, 12));
  expect_close(eta(MapConnectivity::kThreeConnected, r_star3()), one, 236);
  EXPECT_THROW(eta(MapConnectivity::kConnected, Real(0L, kP)), DomainError);
  EXPECT_THROW(map_connectivity(4), DomainError);
  EXPECT_EQ(map_connectivity(2), MapConnectivity::kTwoConnected);
}

TEST(AmplitudeC, Examples) {
  const Real one(1L, kP);
  expect_close(amplitude_c(MapConnectivity::kTwoConnected, one), Q(1, 3));
  expect_close(amplitude_c(MapConnectivity::kThreeConnected, one), 1L / sqrt(Real(27L, kP)));
  expect_close(amplitude_c(MapConnectivity::kConnected, one), 3L * sqrt(Q(1, 15)));
}

TEST(AmplitudeA, GenusZeroAtOne) {
  const Real a0 = amplitude_a(0, Real(1L, kP), compute_t(0, kP));
  expect_close(a0, pow(Real(3L, kP), Q(3, 2)) / (9L * pi(kP)), 244);
  EXPECT_THROW(amplitude_a(-1, Real(1L, kP), Real(1L, kP)), DomainError);
}

TEST(AmplitudeA, PositiveAndConsistent) {
  const Real prec_bound = exp2i(32 - 256, kP);
  for (int g = 0; g <= 5; ++g) {
    const Real tg = compute_t(g, kP);
    for (const char* r : {"0.05", "0.3", "1", "2.5", "20"}) {
      EXPECT_GT(amplitude_a(g, R(r), tg), 0L);
      EXPECT_GT(c_factor(R(r)), 0L);
      EXPECT_GT(d_factor(R(r)), 0L);
    }
  }
  EXPECT_LT(consistency_check_ag(1, R("1.0"), compute_t(1, kP)), prec_bound);
  EXPECT_LT(consistency_check_ag(3, R("0.3"), compute_t(3, kP)), prec_bound);
  EXPECT_LT(consistency_check_ag(2, R("0.7"), compute_t(2, kP)), prec_bound);
}

TEST(AmplitudeA, ConsistencyRandomGrid) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(0.2, 5.0);
  for (int g = 1; g <= 5; ++g) {
    const Real tg = compute_t(g, kP);
    for (int i = 0; i < 20; ++i) {
      const Real r(d(rng), kP);
      EXPECT_LT(consistency_check_ag(g, r, tg), exp2i(32 - 256, kP));
    }
  }
}

TEST(Density, Examples) {
  for (auto k : kAllK) EXPECT_EQ(density_mu(k, Real(1L, kP)), 2L);
  for (auto k : kAllK) expect_close(solve_r(k, Real(2L, kP)), Real(1L, kP), 230);
}

TEST(Density, MatchesLogDerivativeOracle) {
  for (auto k : kAllK) {
    for (const char* rs : {"0.1", "0.7", "3.0"}) {
      const Real r = R(rs);
      const Real fd = -d_dlog_eta(k, r, [](const Real& x) { return log(rho(x)); });
      EXPECT_LT(relative_error(density_mu(k, r), fd), R("1e-60")) << as_int(k) << " " << rs;
      const Real x = r.with_precision(kHi);
      const Real h = Real::parse("1e-40", kHi);
      const Real dmu = (density_mu(k, x + h) - density_mu(k, x - h)) / (2L * h);
      EXPECT_LT(relative_error(density_mu_derivative(k, r), dmu), R("1e-60"));
    }
  }
}

TEST(Density, StrictlyDecreasingOnLogGrid) {
  for (auto k : kAllK) {
    Real prev = density_mu(k, R("1e-3"));
    for (int i = 1; i < 1000; ++i) {
      // 10^{-3 + 6 i / 999}
      const Real r = pow(Real(10L, kP), Real(-3L, kP) + Real(6L * i, kP) / 999L);
      const Real cur = density_mu(k, r);
      ASSERT_LT(cur, prev) << as_int(k) << " at i=" << i;
      ASSERT_GT(sigma2(k, r), 0L);
      prev = cur;
    }
  }
}

TEST(SolveR, RoundTrip) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(0.05, 20.0);
  for (auto k : kAllK) {
    for (int i = 0; i < 100; ++i) {
      const Real r(d(rng), kP);
      const Real back = solve_r(k, density_mu(k, r));
      EXPECT_LT(relative_error(back, r), exp2i(40 - 256, kP)) << as_int(k) << " " << r.to_string(20);
    }
  }
}

TEST(SolveR, DomainErrorsNameInterval) {
  try {
    solve_r(MapConnectivity::kThreeConnected, R("3.5"));
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("(1.50000e+00, 3.00000e+00)"), std::string::npos)
        << e.what();
  }
  EXPECT_THROW(solve_r(MapConnectivity::kThreeConnected, R("1.5")), DomainError);
  EXPECT_THROW(solve_r(MapConnectivity::kThreeConnected, R("3")), DomainError);
  EXPECT_THROW(solve_r(MapConnectivity::kTwoConnected, R("1")), DomainError);
  EXPECT_THROW(solve_r(MapConnectivity::kConnected, R("0.5")), DomainError);
  EXPECT_TRUE(density_interval(MapConnectivity::kConnected, kP).contains(R("1e6")));
}

TEST(Sigma2, Examples) {
  const Real one(1L, kP);
  expect_close(sigma2(MapConnectivity::kTwoConnected, one), Q(3, 4));
  expect_close(sigma2(MapConnectivity::kThreeConnected, one), Q(1, 4));
  expect_close(sigma2(MapConnectivity::kConnected, one), Q(5, 4));
}

TEST(Sigma2, MatchesSecondDerivativeOracle) {
  for (auto k : kAllK) {
    for (const char* rs : {"0.2", "1.0", "4.0"}) {
      const Real r = R(rs);
      const Real fd = d_dlog_eta(k, r, [k](const Real& x) { return density_mu(k, x); });
      EXPECT_LT(relative_error(sigma2(k, r), fd), R("1e-60")) << as_int(k) << " " << rs;
    }
  }
}

TEST(QuadIdentities, Examples) {
  const Real h = R("1e-10");
  const auto at11 = quad_identities({Real(1L, kP), Real(1L, kP)}, h);
  EXPECT_LT(abs(at11.y_hat_residual), exp2i(-240, kP));
  EXPECT_FALSE(at11.jacobian_residual.has_value());
  EXPECT_FALSE(at11.dydx_residual.has_value());  // on the fold
  // (0.5, 2) also sits on rs = 1; only the y* identity applies there.
  const auto b = quad_identities({R("0.5"), R("2.0")}, h);
  EXPECT_LT(abs(b.y_star_residual), exp2i(-240, kP));
  EXPECT_FALSE(b.jacobian_residual.has_value());
  const auto c = quad_identities({R("1.3"), R("0.4")}, h);
  ASSERT_TRUE(c.jacobian_residual.has_value());
  EXPECT_LT(*c.jacobian_residual, R("1e-60"));
  ASSERT_TRUE(c.dydx_residual.has_value());
  EXPECT_LT(*c.dydx_residual, R("1e-15"));
}

TEST(QuadIdentities, SecondOrderFiniteDifference) {
  const auto seq = dydx_residual_sequence({R("1.3"), R("0.4")}, R("1e-2"), 4);
  ASSERT_EQ(seq.size(), 5u);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const double ratio = (seq[i - 1] / seq[i]).to_double();
    EXPECT_NEAR(ratio, 4.0, 0.8) << i;
  }
}

TEST(QuadIdentities, JacobianAgainstNumericOracle) {
  // Forward partials by centered difference, compared with the analytic dy/dx.
  const RSPoint p{Real::parse("0.8", kHi), Real::parse("1.7", kHi)};
  const Real h = Real::parse("1e-40", kHi);
  const auto x_at = [](const Real& r, const Real& s) { return x_of({r, s}); };
  const auto yh_at = [](const Real& r, const Real& s) { return y_hat_of({r, s}); };
  const auto y_at = [](const Real& r, const Real& s) { return y_of({r, s}); };
  const Real xr = (x_at(p.r + h, p.s) - x_at(p.r - h, p.s)) / (2L * h);
  const Real xs = (x_at(p.r, p.s + h) - x_at(p.r, p.s - h)) / (2L * h);
  const Real hr = (yh_at(p.r + h, p.s) - yh_at(p.r - h, p.s)) / (2L * h);
  const Real hs = (yh_at(p.r, p.s + h) - yh_at(p.r, p.s - h)) / (2L * h);
  const Real yr = (y_at(p.r + h, p.s) - y_at(p.r - h, p.s)) / (2L * h);
  const Real ys = (y_at(p.r, p.s + h) - y_at(p.r, p.s - h)) / (2L * h);
  // Along y_hat = const: dr/dx = hs/det, ds/dx = -hr/det.
  const Real det = xr * hs - xs * hr;
  const Real dydx = (yr * hs - ys * hr) / det;
  const RSPoint at{p.r.with_precision(kP), p.s.with_precision(kP)};
  EXPECT_LT(relative_error(dy_dx_at_fixed_y_hat(at), dydx), R("1e-60"));
}

TEST(QuadIdentities, SolveRoundTrip) {
  const RSPoint p{R("2.2"), R("0.35")};
  const RSPoint seed{R("2.0"), R("0.4")};
  const RSPoint back = solve_rs_from_x_y_hat(x_of(p), y_hat_of(p), seed);
  expect_close(back.r, p.r, 220);
  expect_close(back.s, p.s, 220);
  // Same (x, y_hat) from the far side of rs = 1 lands on the mirror preimage.
  const RSPoint far = solve_rs_from_x_y_hat(x_of(p), y_hat_of(p), {R("3.0"), R("0.5")});
  EXPECT_GT(far.r * far.s, 1L);
  expect_close(x_of(far), x_of(p), 200);
  expect_close(y_hat_of(far), y_hat_of(p), 200);
  EXPECT_THROW(solve_rs_from_x_y_hat(x_of(p), y_hat_of(p), {Real(1L, kP), Real(1L, kP)}),
               ConvergenceError);
  EXPECT_THROW(x_of({R("-1"), R("1")}), DomainError);
}

TEST(QuadIdentities, SolveStaysOnSeedBranch) {
  // Plain Newton from (2, 0.4) steps across rs = 1 and stalls on the fold.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(0.1, 5.0);
  int solved = 0;
  for (int i = 0; i < 200; ++i) {
    const RSPoint p{Real(d(rng), kP), Real(d(rng), kP)};
    const int side = (1L - p.r * p.s).sign();
    const RSPoint seed{p.r * R("1.1"), p.s * R("0.9")};
    if ((1L - seed.r * seed.s).sign() != side) continue;
    const RSPoint back = solve_rs_from_x_y_hat(x_of(p), y_hat_of(p), seed);
    expect_close(back.r, p.r, 200);
    expect_close(back.s, p.s, 200);
    ++solved;
  }
  EXPECT_GT(solved, 150);
}

TEST(QuadAmplitude, VariantRatio) {
  for (int g = 1; g <= 4; ++g) {
    const Real tg = compute_t(g, kP);
    for (const char* rs : {"0.4", "1", "3"}) {
      const Real r = R(rs);
      const Real all = quad_amplitude(QuadVariant::kAll, g, r, tg);
      const Real no2 = quad_amplitude(QuadVariant::kNoTwoCycle, g, r, tg);
      const Real near = quad_amplitude(QuadVariant::kNearSimple, g, r, tg);
      EXPECT_GT(all, 0L);
      EXPECT_GT(no2, 0L);
      EXPECT_GT(near, 0L);
      const Real expected = pow(2L + r, Q(5 * g - 3, 2)) * r / (1L + r + r * r);
      expect_close(no2 / all, expected, 236);
    }
  }
  EXPECT_TRUE(quad_amplitude(QuadVariant::kAll, 1, Real(1L, kP), compute_t(1, kP)).is_finite());
  EXPECT_THROW(quad_amplitude(QuadVariant::kAll, 0, Real(1L, kP), compute_t(0, kP)), DomainError);
}

TEST(MapBundle, FieldsAgree) {
  const Real r = R("0.6");
  const auto b = map_bundle(MapConnectivity::kTwoConnected, 1, r, compute_t(1, kP));
  EXPECT_EQ(b.rho, rho(r));
  EXPECT_EQ(b.eta, eta(MapConnectivity::kTwoConnected, r));
  EXPECT_EQ(b.mu, density_mu(MapConnectivity::kTwoConnected, r));
  EXPECT_EQ(b.sigma2, sigma2(MapConnectivity::kTwoConnected, r));
}
