#include <gtest/gtest.h>

#include <random>

#include "mapasym/errors.hpp"
#include "mapasym/log_magnitude.hpp"
#include "mapasym/real.hpp"
#include "mapasym/root_finding.hpp"
#include "mapasym/special.hpp"

using namespace mapasym;

namespace {

constexpr Precision kP{256};

Real R(const char* s, Precision p = kP) { return Real::parse(s, p); }

void expect_rel(const Real& got, const Real& want, long bits) {
  EXPECT_LT(relative_error(got, want), exp2i(-bits, kP))
      << got.to_string(40) << " vs " << want.to_string(40);
}

}  // namespace

TEST(Real, MixedPrecisionTakesMinimum) {
  const Real a(1L, Precision{128});
  const Real b(3L, Precision{300});
  EXPECT_EQ((a / b).precision().bits, 128);
  EXPECT_EQ((b * b).precision().bits, 300);
  EXPECT_EQ((a + 1L).precision().bits, 128);
}

TEST(Real, ParseAndRender) {
  EXPECT_EQ(R("0.25"), Real(1L, kP) / 4L);
  EXPECT_EQ(R("-1.5e3"), Real(-1500L, kP));
  EXPECT_THROW(Real::parse("1.2.3", kP), std::invalid_argument);
  EXPECT_THROW(Real::parse("", kP), std::invalid_argument);
  EXPECT_EQ(Real(1L, kP).to_string(5), "1.0000e+00");
}

TEST(Real, ArithmeticRoundsWithinOneUlp) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(0.1, 10.0);
  for (int i = 0; i < 200; ++i) {
    const Real a(d(rng), kP);
    const Real b(d(rng), kP);
    // (a*b)/b and (a+b)-b return a up to a couple of roundings.
    expect_rel((a * b) / b, a, 254);
    expect_rel((a + b) - b, a, 250);
  }
}

TEST(Real, ExactRationalConversion) {
  const mpq_class q(-49, 4608);
  const Real r(q, kP);
  expect_rel(r * 4608L, Real(-49L, kP), 254);
  const mpz_class big("123456789012345678901234567890");
  EXPECT_EQ(Real(big, kP).to_string(30), "1.23456789012345678901234567890e+29");
}

TEST(LogGamma, TrivialValues) {
  EXPECT_TRUE(log_gamma(Real(1L, kP)).is_zero());
  expect_rel(log_gamma(R("0.5")), log(sqrt(pi(kP))), 248);
  expect_rel(log_gamma(Real(7L, kP)), log(Real(720L, kP)), 248);
}

TEST(LogGamma, RejectsNonPositive) {
  EXPECT_THROW(log_gamma(Real(0L, kP)), DomainError);
  EXPECT_THROW(log_gamma(R("-2.5")), DomainError);
}

TEST(LogGamma, RecurrenceProperty) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(0.0, 50.0);
  for (int i = 0; i < 200; ++i) {
    Real x(d(rng), kP);
    if (x.is_zero()) continue;
    const Real ratio = exp(log_gamma(x + 1L)) / (x * exp(log_gamma(x)));
    EXPECT_LT(abs(ratio - 1L), exp2i(16 - 256, kP)) << x.to_string(20);
  }
}

TEST(GammaSigned, NegativeHalf) {
  const LogMagnitude g = gamma_signed(R("-0.5"));
  EXPECT_EQ(g.sign(), -1);
  expect_rel(g.to_real(), -2L * sqrt(pi(kP)), 248);
  EXPECT_THROW(gamma_signed(Real(-3L, kP)), DomainError);
  EXPECT_THROW(gamma_signed(Real(0L, kP)), DomainError);
}

TEST(LogFactorial, AgreesWithIntegers) {
  for (long n : {0L, 1L, 5L, 20L, 57L}) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    expect_rel(exp(log_factorial(n, kP)), Real(f, kP), 240);
  }
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), 60, 23);
  expect_rel(exp(log_binomial(60, 23, kP)), Real(b, kP), 240);
  EXPECT_THROW(log_binomial(5, 6, kP), DomainError);
  EXPECT_THROW(log_factorial(-1, kP), DomainError);
}

TEST(FindRoot, SqrtTwo) {
  const auto f = [](const Real& x) { return x * x - 2L; };
  const Real tol = R("1e-30");
  const Real root = find_root(f, Real(1L, kP), Real(2L, kP), tol);
  EXPECT_LT(abs(root - sqrt(Real(2L, kP))), tol);
  const auto df = [](const Real& x) { return 2L * x; };
  const Real newton = find_root(f, Real(1L, kP), Real(2L, kP), exp2i(-240, kP), df);
  EXPECT_LT(abs(newton - sqrt(Real(2L, kP))), exp2i(-240, kP));
}

TEST(FindRoot, ReversedBracketAndExactEndpoint) {
  const auto f = [](const Real& x) { return x - 1L; };
  EXPECT_EQ(find_root(f, Real(1L, kP), Real(3L, kP), R("1e-20")), Real(1L, kP));
  const Real root = find_root(f, Real(3L, kP), Real(0L, kP), R("1e-20"));
  EXPECT_LT(abs(root - 1L), R("1e-20"));
}

TEST(FindRoot, Errors) {
  const auto f = [](const Real& x) { return x * x + 1L; };
  EXPECT_THROW(find_root(f, Real(-1L, kP), Real(2L, kP), R("1e-10")), BracketError);
  const auto g = [](const Real& x) { return x - R("0.3"); };
  // 2^-300 is far below what a 256-bit midpoint can resolve near sqrt(0.3).
  const auto sq = [](const Real& x) { return x * x - R("0.3"); };
  EXPECT_THROW(find_root(sq, Real(0L, kP), Real(1L, kP), exp2i(-300, kP)), ConvergenceError);
  EXPECT_THROW(find_root(g, Real(0L, kP), Real(1L, kP), Real(0L, kP)), DomainError);
  RootOptions tight;
  tight.max_iterations = 3;
  EXPECT_THROW(find_root(g, Real(0L, kP), Real(1L, kP), exp2i(-200, kP), {}, tight),
               ConvergenceError);
}

TEST(FindRoot, MonotoneInTolerance) {
  const auto f = [](const Real& x) { return exp(x) - 3L; };
  Real tol = R("1e-3");
  Real prev = find_root(f, Real(0L, kP), Real(2L, kP), tol);
  for (int i = 0; i < 40; ++i) {
    const Real next_tol = tol / 2L;
    const Real next = find_root(f, Real(0L, kP), Real(2L, kP), next_tol);
    EXPECT_LE(abs(next - prev), tol);
    prev = next;
    tol = next_tol;
  }
}

TEST(FindRoot, Deterministic) {
  const auto f = [](const Real& x) { return x * x * x - x - 1L; };
  const Real a = find_root(f, Real(1L, kP), Real(2L, kP), exp2i(-200, kP));
  const Real b = find_root(f, Real(1L, kP), Real(2L, kP), exp2i(-200, kP));
  EXPECT_EQ(a, b);
}

TEST(LogMagnitude, ProductMatchesDirect) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  LogMagnitude acc = LogMagnitude::from_real(Real(1L, kP));
  Real direct(1L, kP);
  for (int i = 0; i < 40; ++i) {
    Real x(d(rng), kP);
    acc = acc * LogMagnitude::from_real(x);
    direct *= x;
  }
  EXPECT_EQ(acc.sign(), direct.sign());
  EXPECT_LT(relative_error(acc.to_real(), direct), exp2i(16 - 256, kP));
}

TEST(LogMagnitude, ZeroAndDivision) {
  const LogMagnitude zero(kP);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_THROW(static_cast<void>(zero.log_abs()), DomainError);
  EXPECT_EQ(zero.to_scientific(), "0");
  const LogMagnitude two = LogMagnitude::from_real(Real(2L, kP));
  EXPECT_TRUE((two * zero).is_zero());
  EXPECT_THROW(two / zero, DomainError);
  expect_rel((two / LogMagnitude::from_real(Real(8L, kP))).to_real(), R("0.25"), 250);
  EXPECT_THROW(LogMagnitude::from_real(Real(-2L, kP)).pow(R("0.5")), DomainError);
}

TEST(LogMagnitude, ScientificRendering) {
  EXPECT_EQ(LogMagnitude::from_real(Real(1000L, kP)).to_scientific(10), "1.000000000e+03");
  EXPECT_EQ(LogMagnitude::from_real(R("-0.00123456789012")).to_scientific(10),
            "-1.234567890e-03");
  // Mantissa rounding carries into the exponent.
  EXPECT_EQ(LogMagnitude::from_real(R("99999.9999999")).to_scientific(5), "1.0000e+05");
  // Far outside double range.
  const LogMagnitude huge = LogMagnitude::from_log(log(Real(10L, kP)) * 123456L);
  EXPECT_EQ(huge.to_scientific(4), "1.000e+123456");
}

TEST(LogMagnitude, CompareMagnitude) {
  const auto a = LogMagnitude::from_real(Real(-5L, kP));
  const auto b = LogMagnitude::from_real(Real(3L, kP));
  EXPECT_EQ(LogMagnitude::compare_magnitude(a, b), 1);
  EXPECT_EQ(LogMagnitude::compare_magnitude(b, a), -1);
  EXPECT_EQ(LogMagnitude::compare_magnitude(LogMagnitude(kP), b), -1);
  EXPECT_EQ(LogMagnitude::compare_magnitude(b, b), 0);
}
