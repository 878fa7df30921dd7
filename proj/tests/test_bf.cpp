#include <gtest/gtest.h>

#include <set>

#include "gl4/bf.hpp"
#include "oracle.hpp"

using namespace gl4;

TEST(BFCases, FourteenTags) {
  const auto& tags = bf_case_tags();
  EXPECT_EQ(tags.size(), 14u);
  EXPECT_EQ(std::set<std::string>(tags.begin(), tags.end()).size(), 14u);
  for (const auto& t : tags) {
    BFCase c = default_bf_case(t);
    EXPECT_EQ(bf_case_tag(c.sigma), t);
    EXPECT_LE(c.sigma.k1, 5);
    EXPECT_LE(c.sigma.k2, 3);
    EXPECT_TRUE(omega0_guard(c.sigma)) << t;
  }
}

TEST(BFCases, TagFromParities) {
  std::vector<cplx> n4 = {0.1, 0.2, 0.3, 0.4};
  EXPECT_EQ(bf_case_tag(make_sigma(Family::P1111, n4, {}, {0, 0, 0, 0})), "1a");
  EXPECT_EQ(bf_case_tag(make_sigma(Family::P1111, n4, {}, {1, 1, 1, 1})), "1e");
  EXPECT_EQ(bf_case_tag(make_sigma(Family::P22, {0.1, 0.2}, {4, 3}, {})), "3c");
  EXPECT_EQ(bf_case_tag(make_sigma(Family::P22, {0.1, 0.2}, {5, 3}, {})), "3b");
}

TEST(BFCases, Validation) {
  BFCase c = default_bf_case("3a");
  EXPECT_THROW(make_bf_case(c.sigma, "3b"), Error);
  try {
    make_bf_case(c.sigma, "4a");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedCase);
  }
  try {
    make_bf_case(c.sigma, "2a");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainViolation);
  }
}

TEST(BFZeta, ClassOneAgainstOracle) {
  std::vector<cplx> nu = {cplx(0.13, 0.02), cplx(-0.08, 0.05), cplx(0.05, -0.03), cplx(-0.11, 0.01)};
  BFCase c = make_bf_case(make_sigma(Family::P1111, nu, {}, {0, 0, 0, 0}), "1a");
  cplx s1(2.1, 0.3), s2(2.4, -0.5);
  cplx ref = 1.0;
  for (int i = 0; i < 4; ++i) {
    ref *= oracle::gamma_R(s1 + nu[i]);
    for (int j = i + 1; j < 4; ++j) ref *= oracle::gamma_R(s2 + nu[i] + nu[j]);
  }
  EXPECT_LT(rel_diff(bf_zeta(c, s1, s2, 1e-11).value, ref), 1e-8);
  EXPECT_LT(rel_diff(bf_lproduct(c.sigma, s1, s2), ref), 1e-12);
}

TEST(BFZeta, AllCases) {
  for (const auto& t : bf_case_tags()) {
    IdentityReport r = bf_verify(default_bf_case(t), 2);
    EXPECT_TRUE(r.pass) << t << " " << r.max_rel_err;
    EXPECT_EQ(r.samples, 2);
  }
}

TEST(BFZeta, ContragredientAllCases) {
  for (const auto& t : bf_case_tags()) {
    IdentityReport r = bf_verify_contragredient(default_bf_case(t), 1);
    EXPECT_TRUE(r.pass) << t << " " << r.max_rel_err;
  }
}

TEST(BFZeta, OtherParameters) {
  InducingDatum s = make_sigma(Family::P22, {cplx(0.02, 0.1), cplx(-0.04, -0.06)}, {5, 2}, {});
  BFCase c = make_bf_case(s, bf_case_tag(s));
  BFOptions o;
  o.seed = 42;
  EXPECT_TRUE(bf_verify(c, 2, o).pass);
  InducingDatum p = make_sigma(Family::P211, {cplx(0.03, 0.02), 0.1, cplx(-0.07, 0.04)}, {6}, {1, 0});
  EXPECT_TRUE(bf_verify(make_bf_case(p, bf_case_tag(p)), 1, o).pass);
}

TEST(BFZeta, PerturbedKernelFails) {
  BFOptions o;
  o.nu_perturbation = 0.01;
  for (const char* t : {"1c", "2e", "3a"}) {
    IdentityReport r = bf_verify(default_bf_case(t), 1, o);
    EXPECT_FALSE(r.pass) << t;
    EXPECT_GT(r.max_rel_err, 1e-3) << t;
  }
}

TEST(BFZeta, Deterministic) {
  BFCase c = default_bf_case("2c");
  BFOptions o;
  o.seed = 7;
  IdentityReport a = bf_verify(c, 2, o), b = bf_verify(c, 2, o);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (size_t k = 0; k < a.rows.size(); ++k) {
    EXPECT_EQ(a.rows[k].point, b.rows[k].point);
    EXPECT_EQ(a.rows[k].lhs, b.rows[k].lhs);
  }
}
