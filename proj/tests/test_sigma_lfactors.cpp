#include <gtest/gtest.h>

#include "gl4/lfactors.hpp"
#include "gl4/report.hpp"
#include "gl4/sigma.hpp"
#include "oracle.hpp"

using namespace gl4;

TEST(Sigma, CaseTableAndWeights) {
  std::vector<cplx> n4 = {0.1, 0.2, -0.3, 0.05};
  EXPECT_EQ(make_sigma(Family::P1111, n4, {}, {0, 0, 0, 0}).case_label(), "1-(i)");
  EXPECT_EQ(make_sigma(Family::P1111, n4, {}, {1, 1, 1, 1}).case_label(), "1-(i)");
  EXPECT_EQ(make_sigma(Family::P1111, n4, {}, {1, 0, 0, 0}).case_label(), "1-(ii)");
  EXPECT_EQ(make_sigma(Family::P1111, n4, {}, {1, 1, 0, 0}).case_label(), "1-(iii)");
  EXPECT_EQ(make_sigma(Family::P1111, n4, {}, {1, 1, 1, 0}).case_label(), "1-(iv)");
  InducingDatum p211 = make_sigma(Family::P211, {0.1, 0.2, 0.3}, {3}, {1, 0});
  EXPECT_EQ(p211.case_label(), "2-(ii)");
  EXPECT_EQ(p211.lambda, (HighestWeight{3, 1, 0}));
  InducingDatum p22 = make_sigma(Family::P22, {0.1, 0.2}, {4, 2}, {});
  EXPECT_EQ(p22.case_label(), "3");
  EXPECT_EQ(p22.lambda, (HighestWeight{4, 2, 0}));
  EXPECT_EQ(p22.b, 0);
  EXPECT_EQ(make_sigma(Family::P22, {0.1, 0.2}, {5, 2}, {}).b, 1);
}

TEST(Sigma, Validation) {
  EXPECT_THROW(make_sigma(Family::P1111, {0.1, 0.2, 0.3}, {}, {0, 0, 0, 0}), Error);
  EXPECT_THROW(make_sigma(Family::P1111, {0.1, 0.2, 0.3, 0.4}, {}, {0, 1, 0, 0}), Error);
  EXPECT_THROW(make_sigma(Family::P211, {0.1, 0.2, 0.3}, {1}, {0, 0}), Error);
  EXPECT_THROW(make_sigma(Family::P22, {0.1, 0.2}, {2, 3}, {}), Error);
  EXPECT_THROW(parse_family("P31"), Error);
  EXPECT_EQ(parse_family("P211"), Family::P211);
}

TEST(Sigma, CapelliEigenvaluesAreElementarySymmetric) {
  InducingDatum s = make_sigma(Family::P22, {cplx(0.1, 0.2), -0.3}, {3, 2}, {});
  auto r = s.roots;
  auto g = capelli_eigenvalues(s);
  EXPECT_LT(std::abs(g[0] - (r[0] + r[1] + r[2] + r[3])), 1e-15);
  EXPECT_LT(std::abs(g[3] - r[0] * r[1] * r[2] * r[3]), 1e-15);
}

TEST(Sigma, ContragredientAndTwist) {
  InducingDatum s = make_sigma(Family::P211, {cplx(0.1, 0.2), -0.3, 0.4}, {3}, {1, 0});
  InducingDatum c = contragredient(s);
  for (size_t i = 0; i < s.nu.size(); ++i) EXPECT_EQ(c.nu[i], -s.nu[i]);
  EXPECT_EQ(c.lambda, s.lambda);
  InducingDatum t = twist(s, 0.5);
  EXPECT_EQ(t.nu[1], s.nu[1] + 0.5);
}

TEST(Sigma, OmegaGuard) {
  EXPECT_TRUE(omega0_guard(make_sigma(Family::P1111, {0.11, -0.07, 0.05, -0.13}, {}, {0, 0, 0, 0})));
  EXPECT_FALSE(omega0_guard(make_sigma(Family::P1111, {0.5, 0.0, 0.2, 0.3}, {}, {0, 0, 0, 0})));
  EXPECT_FALSE(omega0_guard(make_sigma(Family::P22, {0.0, 0.0}, {4, 2}, {})));
}

TEST(LFactors, PrincipalSeries) {
  std::vector<cplx> nu = {cplx(0.1, 0.02), -0.2, cplx(0.05, -0.1), 0.3};
  std::vector<int> d = {1, 1, 0, 0};
  InducingDatum s = make_sigma(Family::P1111, nu, {}, d);
  LFactorSet ls = lfactor_set(s);
  cplx z(1.7, 0.4);
  cplx std_ref = 1.0, ext_ref = 1.0;
  for (int i = 0; i < 4; ++i) std_ref *= oracle::gamma_R(z + nu[i] + double(d[i]));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) ext_ref *= oracle::gamma_R(z + nu[i] + nu[j] + double((d[i] + d[j]) % 2));
  EXPECT_LT(rel_diff(eval_gammas(ls.std_gammas, z), std_ref), 1e-12);
  EXPECT_LT(rel_diff(eval_gammas(ls.ext_gammas, z), ext_ref), 1e-12);
  EXPECT_EQ(ls.eps_std, 2);
  EXPECT_EQ(ls.eps_ext, 0);
}

TEST(LFactors, DiscreteSeriesPair) {
  InducingDatum s = make_sigma(Family::P22, {0.0, 0.0}, {4, 2}, {});
  LFactorSet ls = lfactor_set(s);
  cplx z = 1.5;
  cplx ref = oracle::gamma_C(z + 1.5) * oracle::gamma_C(z + 0.5);
  EXPECT_LT(rel_diff(eval_gammas(ls.std_gammas, z), ref), 1e-12);
  EXPECT_EQ(ls.std_gammas.size(), 2u);
  EXPECT_EQ(ls.ext_gammas.size(), 4u);
  EXPECT_EQ(langlands_parameter(s).dim(), 4);
  EXPECT_EQ(exterior_square_parameter(s).dim(), 6);
}

TEST(LFactors, IPower) {
  EXPECT_EQ(i_power(0), cplx(1.0));
  EXPECT_EQ(i_power(1), cplx(0.0, 1.0));
  EXPECT_EQ(i_power(-1), cplx(0.0, -1.0));
  EXPECT_EQ(i_power(6), cplx(-1.0));
}
