#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gl4/gamma.hpp"

using namespace gl4;
using std::numbers::pi;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

// Stirling series for log Gamma, shifted up to large |s| by the recursion.
cplx stirling_log_gamma(cplx s) {
  cplx shift = 0.0;
  while (std::abs(s) < 30.0) {
    shift -= std::log(s);
    s += 1.0;
  }
  const double B[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6};
  cplx r = (s - 0.5) * std::log(s) - s + 0.5 * std::log(2 * pi);
  cplx p = 1.0 / s;
  for (int k = 1; k <= 7; ++k) {
    r += B[k - 1] / (2.0 * k * (2.0 * k - 1)) * p;
    p /= s * s;
  }
  return r + shift;
}

}  // namespace

TEST(Gamma, SmallValues) {
  EXPECT_NEAR(gl4::gamma(cplx(1.0)).real(), 1.0, 1e-15);
  EXPECT_NEAR(gl4::gamma(cplx(0.5)).real(), std::sqrt(pi), 1e-14);
  EXPECT_NEAR(gl4::gamma(cplx(4.0)).real(), 6.0, 1e-13);
  EXPECT_LT(rel(gamma(cplx(-2.5, 0)), -8.0 * std::sqrt(pi) / 15.0), 1e-13);
}

TEST(Gamma, ArchimedeanFactors) {
  EXPECT_NEAR(gamma_R(1.0).real(), 1.0, 1e-14);
  EXPECT_NEAR(gamma_R(2.0).real(), 1.0 / pi, 1e-15);
  EXPECT_NEAR(gamma_R(3.0).real(), 1.0 / (2 * pi), 1e-15);
  EXPECT_NEAR(gamma_C(1.0).real(), 1.0 / pi, 1e-15);
  EXPECT_NEAR(gamma_C(2.0).real(), 1.0 / (2 * pi * pi), 1e-15);
}

TEST(Gamma, PolesRejected) {
  for (double p : {0.0, -1.0, -2.0, -7.0}) {
    EXPECT_THROW(gl4::gamma(cplx(p)), Error);
    EXPECT_THROW(gamma_C(p), Error);
  }
  EXPECT_THROW(gamma_R(-4.0), Error);
  EXPECT_NO_THROW(gamma_R(-1.0));
  EXPECT_NO_THROW(gamma(cplx(-1.0 + 1e-9, 0)));
}

TEST(Gamma, LogGamma) {
  EXPECT_NEAR(std::abs(log_gamma(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(log_gamma(2.0)), 0.0, 1e-15);
  cplx s(0.5, 10.0);
  EXPECT_LT(std::abs(log_gamma(s) - stirling_log_gamma(s)), 1e-12);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(0.1, 8), im(-40, 40);
  for (int k = 0; k < 200; ++k) {
    cplx z(re(rng), im(rng));
    EXPECT_LT(std::abs(log_gamma(z) - stirling_log_gamma(z)), 1e-11) << z;
    EXPECT_LT(rel(std::exp(log_gamma(z)), gamma(z)), 1e-12) << z;
  }
}

TEST(Gamma, AccuracyOnLargeImaginaryParts) {
  // |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
  for (double t : {10.0, 50.0, 120.0, 200.0}) {
    double expect = 0.5 * std::log(pi / std::cosh(pi * t));
    EXPECT_NEAR(std::log(std::abs(gamma(cplx(0.5, t)))), expect, 1e-11 * std::abs(expect));
  }
}

TEST(Gamma, RecursionAndDuplication) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(0.1, 5), im(-20, 20);
  for (int k = 0; k < 1000; ++k) {
    cplx s(re(rng), im(rng));
    EXPECT_LT(rel(gamma_R(s + 2.0), s / (2 * pi) * gamma_R(s)), 1e-12);
    EXPECT_LT(rel(gamma_C(s + 1.0), s / (2 * pi) * gamma_C(s)), 1e-12);
    EXPECT_LT(rel(gamma_R(s) * gamma_R(s + 1.0), gamma_C(s)), 1e-12);
  }
}

TEST(Gamma, ConjugateSymmetry) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> re(-6, 6), im(-30, 30);
  for (int k = 0; k < 200; ++k) {
    cplx s(re(rng), im(rng));
    EXPECT_EQ(gamma(std::conj(s)), std::conj(gamma(s)));
    EXPECT_EQ(log_gamma(std::conj(s)), std::conj(log_gamma(s)));
  }
}

TEST(Gamma, Pochhammer) {
  EXPECT_EQ(pochhammer(cplx(0.3, 1.0), 0), cplx(1.0));
  EXPECT_NEAR(pochhammer(2.0, 3).real(), 24.0, 1e-12);
  EXPECT_NEAR(pochhammer(0.5, 2).real(), 0.75, 1e-15);
  EXPECT_NEAR(pochhammer(3.0, -2).real(), 0.5, 1e-15);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(0.2, 3), im(-3, 3);
  for (int k = 0; k < 100; ++k) {
    cplx a(re(rng), im(rng));
    for (int i = -10; i <= 10; i += 3)
      for (int j = -10; j <= 10; j += 4)
        EXPECT_LT(rel(pochhammer(a, i + j), pochhammer(a, i) * pochhammer(a + double(i), j)), 1e-12);
  }
  cplx a(0.7, 0.2);
  EXPECT_LT(rel(pochhammer(a, 80), std::exp(log_gamma(a + 80.0) - log_gamma(a))), 1e-11);
}

TEST(Gamma, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10.0);
  EXPECT_EQ(binomial(60, 30), 118264581564861424.0);
  EXPECT_EQ(binomial(4, 7), 0.0);
}
