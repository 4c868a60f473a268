#include "bhkit/catalog.hpp"
#include "bhkit/extremals.hpp"
#include "bhkit/norms.hpp"
#include "bhkit/solvers.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace bhkit;
using cd = std::complex<double>;

TEST(Sturm, CountsKnownRoots) {
  // (x-1/4)(x-1/2)(x+1/3), one root outside (0,1].
  const ExactUniPoly p = ExactUniPoly({Rational(1, 24), Rational(-1, 8), Rational(-5, 12), Rational(1)});
  const auto chain = build_exact_sturm_chain(p);
  EXPECT_EQ(chain.count(Rational(0), Rational(1)), 2);
  EXPECT_EQ(chain.count(Rational(-1), Rational(1)), 3);
  EXPECT_EQ(chain.count(Rational(1, 4), Rational(1)), 1);  // half-open (a, b]
  const auto fchain = build_float_sturm_chain(UniPoly({1.0 / 24.0, -0.125, -5.0 / 12.0, 1.0}));
  ASSERT_TRUE(fchain.has_value());
  EXPECT_EQ(fchain->count(-1.0, 1.0), 3);
}

TEST(Sturm, VariationsAreMonotone) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const UniPoly p(oracle::random_coeffs(rng, 2 + trial % 8));
    const auto chain = build_exact_sturm_chain(to_exact(p));
    int prev = chain.variations(Rational(-3));
    for (int i = -5; i <= 6; ++i) {
      const int v = chain.variations(Rational(i, 2));
      EXPECT_LE(v, prev);
      prev = v;
    }
    // Remainder relation: p_{i-1} = q p_i - p_{i+1} means p_{i+1} = -rem(p_{i-1}, p_i).
    const auto& seq = chain.sequence();
    for (std::size_t i = 2; i < seq.size(); ++i) EXPECT_EQ(seq[i].coeffs(), (-seq[i - 2].remainder(seq[i - 1])).coeffs());
  }
}

TEST(Sturm, FloatCounterFallsBackWhenIllConditioned) {
  // Roots 1/2 and 1/2 + 2^-30, all coefficients exact in double.
  const double e = std::ldexp(1.0, -30);
  const UniPoly p({0.25 + e / 2.0, -(1.0 + e), 1.0});
  const RootCounter counter(p);
  EXPECT_TRUE(counter.exact());
  EXPECT_EQ(counter.count(0.0, 1.0), 2);
  EXPECT_EQ(counter.count(0.0, 0.5), 1);
}

TEST(CriticalPoints, Examples) {
  const UniPoly cubic({0.0, -1.0, 0.0, 1.0});
  const auto r = critical_points(cubic, -1.0, 1.0);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0], -1.0 / std::sqrt(3.0), 1e-10);
  EXPECT_NEAR(r[1], 1.0 / std::sqrt(3.0), 1e-10);

  const UniPoly sq({0.0, 0.0, 1.0});
  const auto z = critical_points(sq, -1.0, 1.0);
  ASSERT_EQ(z.size(), 1u);
  EXPECT_NEAR(z[0], 0.0, 1e-10);

  EXPECT_TRUE(critical_points(UniPoly({3.0}), -1.0, 1.0).empty());
  EXPECT_THROW(critical_points(cubic, 1.0, -1.0), std::invalid_argument);

  const double l = -2.1;
  const UniPoly q({0.0, 1.0, 0.0, l, 0.0, 1.0});
  const auto cp = critical_points(q, 0.0, 1.0);
  const double x0 = std::sqrt((-3.0 * l - std::sqrt(9.0 * l * l - 20.0)) / 10.0);
  bool found = false;
  for (double c : cp) found = found || std::fabs(c - x0) < 1e-10;
  EXPECT_TRUE(found);
  EXPECT_NEAR(x0, detail::qlambda_x0(l), 1e-15);
}

TEST(CriticalPoints, DoubleRootReportedOnce) {
  // q' = 3 (x - 1/4)^2 has a double root; every coefficient is exact in binary.
  const UniPoly q({0.0, 0.1875, -0.75, 1.0});
  EXPECT_TRUE(RootCounter(q.derivative()).exact());
  const auto r = critical_points(q, -1.0, 1.0, 1e-8);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(r[0], 0.25, 1e-6);
}

TEST(SupNormInterval, Examples) {
  const auto sq = sup_norm_interval(UniPoly({0.0, 0.0, 1.0}), -1.0, 1.0);
  EXPECT_DOUBLE_EQ(sq.value, 1.0);
  EXPECT_DOUBLE_EQ(std::fabs(sq.arg), 1.0);
  EXPECT_LE(sq.radius, kIntervalTol);

  const auto p3 = catalog(CatalogId::P3);
  EXPECT_NEAR(sup_norm_interval(dehomogenize(p3.poly, Edge::y_one), -1.0, 1.0).value, 1.33848, 2e-5);
  const auto p5 = catalog(CatalogId::P5);
  // P5 is antisymmetric under swapping x and y up to sign, so one edge carries the norm.
  EXPECT_NEAR(sup_norm_interval(dehomogenize(p5.poly, Edge::y_one), -1.0, 1.0).value, 0.28617, 1e-5);
}

TEST(SupNormSquare, Examples) {
  EXPECT_DOUBLE_EQ(sup_norm_square(HomPoly2(2, {1.0, 0.0, 0.0})).value, 1.0);
  EXPECT_NEAR(sup_norm_square(catalog(CatalogId::P7).poly).value, 0.07138, 1e-5);
  EXPECT_NEAR(sup_norm_square(catalog(CatalogId::P10).poly).value, 0.01530, 1e-5);
  EXPECT_THROW(sup_norm_square(HomPoly2::zero(3)), std::domain_error);
}

TEST(SupNormSquare, ExactAndFloatAgree) {
  for (auto id : kCatalogIds) {
    const auto e = catalog(id);
    if (!e.exact) continue;
    EXPECT_NEAR(sup_norm_square(*e.exact).value, sup_norm_square(e.poly).value, 1e-14) << to_string(id);
  }
}

TEST(SupNormSquare, MatchesBoundarySamplingOracle) {
  for (auto id : kCatalogIds) {
    const auto e = catalog(id);
    const double got = sup_norm_square(e.poly).value;
    const double ref = oracle::sampled_sup_square(e.poly.coeffs());
    EXPECT_GE(got, ref * (1.0 - 1e-12)) << to_string(id);
    EXPECT_NEAR(got, ref, 1e-6 * got) << to_string(id);
  }
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + trial % 10;
    const HomPoly2 p(m, oracle::random_coeffs(rng, m));
    const double got = sup_norm_square(p).value;
    const double ref = oracle::sampled_sup_square(p.coeffs());
    EXPECT_GE(got, ref * (1.0 - 1e-12));
    EXPECT_NEAR(got, ref, 1e-6 * got) << "trial " << trial;
  }
}

TEST(SupNormSquare, NormAxioms) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> scale(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + trial % 7;
    const HomPoly2 p(m, oracle::random_coeffs(rng, m));
    const HomPoly2 q(m, oracle::random_coeffs(rng, m));
    std::vector<double> s(m + 1);
    for (int k = 0; k <= m; ++k) s[k] = p[k] + q[k];
    const double np = sup_norm_square(p).value;
    const double nq = sup_norm_square(q).value;
    EXPECT_LE(sup_norm_square(HomPoly2(m, s)).value, np + nq + 1e-12);
    const double c = scale(rng);
    EXPECT_NEAR(sup_norm_square(p.scaled(c)).value, std::fabs(c) * np, 1e-12 * (1.0 + np));
  }
}

TEST(SupNormDisk, Examples) {
  EXPECT_NEAR(sup_norm_disk_real(1.0, 0.0, 0.0).value, 1.0, 1e-12);
  const auto two = sup_norm_disk_real(1.0, 0.0, 1.0);
  EXPECT_NEAR(two.value, 2.0, 1e-12);
  EXPECT_NEAR(std::sin(two.arg), 0.0, 1e-6);
  EXPECT_NEAR(sup_norm_disk_complex(1.0, 0.0, 0.0).value, 1.0, 1e-12);
  EXPECT_NEAR(sup_norm_disk_complex(1.0, 0.0, 1.0).value, 2.0, 1e-12);

  const cd i(0.0, 1.0);
  const double got = sup_norm_disk_complex(i, 1.0 + i, 2.0).value;
  EXPECT_NEAR(got, oracle::sampled_sup_disk(i, 1.0 + i, 2.0), 1e-8);
  EXPECT_NEAR(got, 3.0 + std::sqrt(2.0), 1e-10);

  const auto ak = aron_klimek_extreme(0.25, -0.25);
  EXPECT_NEAR(sup_norm_disk_real(ak.a.real(), ak.b.real(), ak.c.real()).value, 1.0, 1e-8);
}

TEST(SupNormDisk, MatchesDenseSamplingOracle) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const cd a(nd(rng), nd(rng));
    const cd b(nd(rng), nd(rng));
    const cd c(nd(rng), nd(rng));
    const double got = sup_norm_disk_complex(a, b, c).value;
    EXPECT_NEAR(got, oracle::sampled_sup_disk(a, b, c), 1e-8 * (1.0 + got));
  }
}

TEST(SupNormDisk, RotationInvarianceAndAxioms) {
  std::mt19937_64 rng(37);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::uniform_real_distribution<double> ang(-3.14, 3.14);
  for (int trial = 0; trial < 300; ++trial) {
    const cd a(nd(rng), nd(rng));
    const cd b(nd(rng), nd(rng));
    const cd c(nd(rng), nd(rng));
    const double base = sup_norm_disk_complex(a, b, c).value;
    // z -> e^{iu} z, w -> e^{iv} w, overall phase e^{iw}.
    const cd eu = std::polar(1.0, ang(rng));
    const cd ev = std::polar(1.0, ang(rng));
    const cd ew = std::polar(1.0, ang(rng));
    EXPECT_NEAR(sup_norm_disk_complex(ew * a * eu * eu, ew * b * eu * ev, ew * c * ev * ev).value, base, 1e-10 * (1 + base));
    const cd s(nd(rng), nd(rng));
    EXPECT_NEAR(sup_norm_disk_complex(s * a, s * b, s * c).value, std::abs(s) * base, 1e-10 * (1 + std::abs(s) * base));
    const cd a2(nd(rng), nd(rng));
    const cd b2(nd(rng), nd(rng));
    const cd c2(nd(rng), nd(rng));
    EXPECT_LE(sup_norm_disk_complex(a + a2, b + b2, c + c2).value,
              base + sup_norm_disk_complex(a2, b2, c2).value + 1e-10);
  }
}

TEST(ClosedNormPab, Examples) {
  EXPECT_DOUBLE_EQ(closed_norm_Pab(1.0, 0.0), 2.0);
  EXPECT_NEAR(closed_norm_Pab(1.0, constants::b1_radical()), 1.33848, 1e-4);
  EXPECT_NEAR(closed_norm_Pab(1.0, -1.0), sup_norm_square(pab_poly(1.0, -1.0)).value, 1e-8);
}

TEST(ClosedNormPab, BranchesAgreeAtBoundary) {
  // Both sides of the ratio window b/a = b1 and b/a = 3 - 2 sqrt 3.
  for (double r : {constants::b1_radical(), constants::pab_upper_ratio()}) {
    const double below = closed_norm_Pab(1.0, r - 1e-9);
    const double above = closed_norm_Pab(1.0, r + 1e-9);
    EXPECT_NEAR(below, above, 1e-7) << r;
  }
}

TEST(ClosedNormPab, MatchesNumericEngine) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double a = u(rng);
    const double b = u(rng);
    const double closed = closed_norm_Pab(a, b);
    EXPECT_NEAR(closed, sup_norm_square(pab_poly(a, b)).value, 1e-8) << a << ' ' << b;
  }
}

TEST(ClosedNormQlambda, Examples) {
  EXPECT_DOUBLE_EQ(closed_norm_Qlambda(0.0), 2.0);
  const double l0 = lambda0();
  EXPECT_NEAR(closed_norm_Qlambda(l0), std::fabs(2.0 + l0), 1e-12);
  EXPECT_NEAR(std::fabs(detail::qlambda_at_x0(l0)), std::fabs(2.0 + l0), 1e-12);
  EXPECT_NEAR(closed_norm_Qlambda(l0), 0.2654, 1e-4);
  EXPECT_NEAR(closed_norm_Qlambda(-2.0), sup_norm_square(qlambda_poly(-2.0)).value, 1e-8);
}

TEST(ClosedNormQlambda, MatchesNumericEngine) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-4.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double l = u(rng);
    EXPECT_NEAR(closed_norm_Qlambda(l), sup_norm_square(qlambda_poly(l)).value, 1e-8) << l;
  }
}

TEST(ClosedNormQlambda, InteriorValueMatchesDirectEvaluation) {
  for (double l : {-4.0, -3.0, -2.5, -2.0, -1.6}) {
    const double x0 = detail::qlambda_x0(l);
    const double direct = std::pow(x0, 5) + l * std::pow(x0, 3) + x0;
    EXPECT_NEAR(detail::qlambda_at_x0(l), direct, 1e-12) << l;
  }
}
