#include <gtest/gtest.h>

#include "mapasym/errors.hpp"
#include "mapasym/map_constants.hpp"

using namespace mapasym;

namespace {

constexpr Precision kP{256};

/// a + b sqrt(3) with rational a, b.
struct QSqrt3 {
  mpq_class a, b;

  QSqrt3 operator+(const QSqrt3& o) const { return {a + o.a, b + o.b}; }
  QSqrt3 operator*(const QSqrt3& o) const { return {a * o.a + 3 * b * o.b, a * o.b + b * o.a}; }
  Real value(Precision p) const { return Real(a, p) + Real(b, p) * sqrt(Real(3L, p)); }
};

}  // namespace

TEST(AgSequence, FirstTermsByHand) {
  const AgSequence a = compute_a(3);
  ASSERT_EQ(a.size(), 4u);
  EXPECT_EQ(a[0], 1);
  EXPECT_EQ(a[1], mpq_class(-1, 48));
  // (6*4/48)(-1/48) - (1/2)(1/48)^2
  EXPECT_EQ(a[2], mpq_class(-1, 96) - mpq_class(1, 4608));
  EXPECT_EQ(a[2], mpq_class(-49, 4608));
  // (11*9/48) a_2 - a_1 a_2
  EXPECT_EQ(a[3], mpq_class(-1225, 55296));
  EXPECT_EQ(compute_a(0).size(), 1u);
  EXPECT_THROW(compute_a(-1), DomainError);
}

TEST(AgSequence, RecursionReverified) {
  const AgSequence a = compute_a(30);
  EXPECT_TRUE(verify_recursion(a));
  std::vector<mpq_class> tampered = a.values();
  tampered[17] += mpq_class(1, 1000000);
  EXPECT_FALSE(verify_recursion(AgSequence(tampered)));
  for (const auto& v : a.values()) {
    EXPECT_GT(v.get_den(), 0);
    EXPECT_EQ(gcd(v.get_num(), v.get_den()), 1);
  }
}

TEST(Tg, KnownValues) {
  const Real sqrt_pi = sqrt(pi(kP));
  EXPECT_LT(relative_error(compute_t(0, kP), 2L / sqrt_pi), exp2i(-250, kP));
  EXPECT_EQ(compute_t(1, kP), Real(mpq_class(1, 24), kP));
  // a_2 = -49/4608, Gamma(9/2) = 105 sqrt(pi) / 16.
  EXPECT_LT(relative_error(compute_t(2, kP), Real(7L, kP) / (4320L * sqrt_pi)), exp2i(-248, kP));
}

TEST(Tg, PositiveForSmallGenus) {
  const AgSequence a = compute_a(10);
  for (int g = 0; g <= 10; ++g) EXPECT_GT(compute_t(a, g, kP), 0L) << g;
}

TEST(Tg, PrecisionStable) {
  for (int g = 0; g <= 8; ++g) {
    const Real lo = compute_t(g, Precision{128});
    const Real hi = compute_t(g, Precision{512});
    EXPECT_LT(relative_error(lo, hi.with_precision(Precision{128})), exp2i(-120, Precision{128}))
        << g;
  }
}

TEST(Vg, ExactQuadraticFieldRoute) {
  // The recursion is closed in Q(sqrt 3) for rational v_0; re-run it exactly.
  const mpq_class v0(2, 7);
  const int g_max = 9;
  const AgSequence a = compute_a(g_max / 2);
  const QSqrt3 scale{0, mpq_class(1, 6)};  // 1/(2 sqrt 3) = sqrt(3)/6
  std::vector<QSqrt3> exact{{v0, 0}};
  for (int g = 1; g <= g_max; ++g) {
    QSqrt3 inner{0, 0};
    if (g % 2 == 0) inner.a -= 3 * a[g / 2];
    inner = inner + QSqrt3{mpq_class(5 * g - 6, 2), 0} * exact[g - 1];
    for (int k = 1; k <= g - 1; ++k) inner = inner + exact[k] * exact[g - k];
    exact.push_back(scale * inner);
  }
  const std::vector<Real> v = compute_v(g_max, Real(v0, kP));
  ASSERT_EQ(v.size(), exact.size());
  for (int g = 0; g <= g_max; ++g) {
    EXPECT_LT(relative_error(v[g], exact[g].value(kP)), exp2i(-236, kP)) << g;
  }
}

TEST(Vg, FiniteAndPrecisionStable) {
  const Real v0 = Real::parse("0.5", kP);
  const auto v = compute_v(12, v0);
  const auto v_hi = compute_v(12, Real::parse("0.5", Precision{320}));
  for (std::size_t g = 0; g < v.size(); ++g) {
    EXPECT_TRUE(v[g].is_finite());
    EXPECT_LT(relative_error(v[g], v_hi[g].with_precision(kP)), exp2i(32 - 256, kP)) << g;
  }
  EXPECT_THROW(compute_v(0, v0), DomainError);
}

TEST(Pg, FiniteAndStable) {
  const Real v0 = Real::parse("0.5", kP);
  for (int g = 1; g <= 5; ++g) {
    const Real p = compute_p(g, v0);
    EXPECT_TRUE(p.is_finite()) << g;
    const Real p2 = compute_p(g, Real::parse("0.5", Precision{512}));
    EXPECT_LT(relative_error(p, p2.with_precision(kP)), Real::parse("1e-20", kP)) << g;
  }
  EXPECT_THROW(compute_p(0, v0), DomainError);
}

TEST(ConstantsTable, ProvenanceAndLookup) {
  ConstantsTable t;
  t.set("t_1", compute_t(1, kP), Provenance::kExactRecursion);
  t.set("p_1", compute_p(1, Real::parse("0.5", kP)), Provenance::kConjectured);
  EXPECT_TRUE(t.contains("p_1"));
  EXPECT_FALSE(t.contains("p_2"));
  EXPECT_EQ(to_string(t.at("p_1").provenance), "conjectured");
  t.set("t_1", Real(1L, kP), Provenance::kClosedForm);
  EXPECT_EQ(t.entries().size(), 2u);
  EXPECT_EQ(t.entries()[0].name, "t_1");
  EXPECT_EQ(t.at("t_1").value, Real(1L, kP));
  EXPECT_THROW(t.at("missing"), std::out_of_range);
}

TEST(Provenance, Tags) {
  EXPECT_EQ(to_string(Provenance::kExactRecursion), "exact-recursion");
  EXPECT_EQ(to_string(Provenance::kClosedForm), "closed-form");
  EXPECT_EQ(to_string(Provenance::kRootSolve), "root-solve");
  EXPECT_EQ(to_string(Provenance::kPaperNumeric), "paper-numeric");
  EXPECT_EQ(to_string(Provenance::kConjectured), "conjectured");
  EXPECT_EQ(to_string(Provenance::kCensus), "census");
}
