#include <gtest/gtest.h>

#include "gl4/pde.hpp"

using namespace gl4;

namespace {

const std::vector<cplx> kNu4 = {0.11, -0.07, 0.05, -0.13};
const std::vector<cplx> kNu3 = {0.09, -0.06, 0.12};
const std::vector<cplx> kNu2 = {0.08, -0.05};

bool same(const DiffOp& a, const DiffOp& b) {
  DiffOp d = a - b;
  const Point pt = {{"s1", cplx(0.3, 0.1)}, {"s2", cplx(-1.2, 0.7)}, {"s3", 2.1}};
  for (const auto& [sh, p] : d.terms())
    if (std::abs(p.eval(pt)) > 1e-12) return false;
  return true;
}

const std::vector<S3>& points() {
  static const std::vector<S3> p = sample_points(1, 3);
  return p;
}

}  // namespace

TEST(DiffOp, CommutationRelations) {
  for (int i = 1; i <= 3; ++i) {
    DiffOp d = DiffOp::d(i), y = DiffOp::y(i);
    EXPECT_TRUE(same(d * y - y * d, y));
    for (int j = 1; j <= 3; ++j)
      if (j != i) EXPECT_TRUE(same(d * DiffOp::y(j), DiffOp::y(j) * d));
  }
  EXPECT_TRUE(same(DiffOp::d(1) * DiffOp::d(2), DiffOp::d(2) * DiffOp::d(1)));
  EXPECT_TRUE(same(DiffOp(2.0) * DiffOp::y(1), DiffOp::y(1) + DiffOp::y(1)));
  EXPECT_TRUE((DiffOp::y(1) - DiffOp::y(1)).terms().empty());
}

TEST(DiffOp, Associativity) {
  DiffOp a = DiffOp::d(1) + DiffOp::y(2), b = DiffOp::y(1) * DiffOp::d(3), c = DiffOp::d(2) - 3.0;
  EXPECT_TRUE(same((a * b) * c, a * (b * c)));
  EXPECT_TRUE(same(a * (b + c), a * b + a * c));
}

TEST(MellinOperator, Linearity) {
  InducingDatum sg = make_sigma(Family::P211, kNu3, {2}, {1, 0});
  GenIndex l = enumerate_S(sg.lambda)[2];
  Combo c;
  add_to(c, l, 1);
  MellinOperator A, B, AB;
  A.add(DiffOp::d(1) * DiffOp::y(2), c);
  B.add(DiffOp::y(3) - 2.0, c);
  AB.add(DiffOp::d(1) * DiffOp::y(2) + DiffOp::y(3) - 2.0, c);
  S3 s = points()[0];
  cplx a = apply_mellin_operator(A, sg, s).value, b = apply_mellin_operator(B, sg, s).value;
  cplx ab = apply_mellin_operator(AB, sg, s).value;
  EXPECT_LT(std::abs(ab - a - b), 1e-12 * (std::abs(a) + std::abs(b)));
}

TEST(KOperators, KeysAndShortForms) {
  InducingDatum sg = make_sigma(Family::P1111, kNu4, {}, {0, 0, 0, 0});
  auto K = build_k_operators(sg, GenIndex{});
  for (const char* k : {"K12", "K23", "K34", "K13", "K24", "K14", "K12_34"}) {
    ASSERT_TRUE(K.count(k)) << k;
    EXPECT_TRUE(K[k].empty()) << k;
  }
  InducingDatum s2 = make_sigma(Family::P1111, kNu4, {}, {1, 0, 0, 0});
  auto K1 = build_k_operators(s2, unit(3));
  // only indices inside S_lambda survive
  for (const auto& [name, combo] : K1)
    for (const auto& [l, q] : combo) EXPECT_TRUE(in_S(s2.lambda, l)) << name;
  EXPECT_FALSE(K1["K13"].empty());
}

TEST(Capelli, ClassOne) {
  InducingDatum sg = make_sigma(Family::P1111, kNu4, {}, {0, 0, 0, 0});
  IdentityReport r = check_capelli(sg, GenIndex{}, points());
  EXPECT_TRUE(r.pass) << r.max_rel_err;
}

TEST(Capelli, AllFamilies) {
  for (const auto& sg : {make_sigma(Family::P1111, kNu4, {}, {1, 1, 0, 0}), make_sigma(Family::P211, kNu3, {2}, {1, 0}),
                         make_sigma(Family::P22, kNu2, {2, 2}, {})}) {
    IdentityReport r = check_capelli_all(sg, points());
    EXPECT_TRUE(r.pass) << sg.str() << " " << r.max_rel_err;
  }
}

TEST(Capelli, NegativeControl) {
  InducingDatum sg = make_sigma(Family::P211, kNu3, {2}, {1, 0});
  PdeOptions bad;
  bad.gamma_shift = {0.0, 0.1, 0.0, 0.0};
  IdentityReport r = check_capelli_all(sg, points(), bad);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.max_rel_err, 1e-3);
}

TEST(Capelli, LiteralK1234EntryBreaksC4) {
  InducingDatum sg = make_sigma(Family::P211, kNu3, {2}, {1, 0});
  PdeOptions lit;
  lit.literal_k1234 = true;
  std::map<std::string, double> per;
  std::vector<MellinOperator> ops;
  for (const auto& l : enumerate_S(sg.lambda))
    for (auto& op : capelli_operators(sg, l, lit)) ops.push_back(op);
  check_operators("literal", sg, ops, points(), 1e-6, &per);
  EXPECT_GT(per["C4"], 1e-3);
  EXPECT_LT(check_capelli_all(sg, points()).max_rel_err, 1e-8);
}

TEST(Capelli, ReducedTargetsAgree) {
  InducingDatum sg = make_sigma(Family::P22, kNu2, {3, 2}, {});
  PdeOptions red;
  red.reduce_targets = true;
  IdentityReport r = check_capelli_all(sg, points(), red);
  EXPECT_TRUE(r.pass) << r.max_rel_err;
  IdentityReport d = check_dirac_schmid(sg, "all", points(), red);
  EXPECT_TRUE(d.pass) << d.max_rel_err;
}

TEST(DiracSchmid, FamiliesTwoAndThree) {
  InducingDatum a = make_sigma(Family::P211, kNu3, {2}, {0, 0});
  EXPECT_TRUE(check_dirac_schmid(a, "ii", points()).pass);
  InducingDatum b = make_sigma(Family::P22, kNu2, {2, 2}, {});
  EXPECT_TRUE(check_dirac_schmid(b, "iii", points()).pass);
  InducingDatum c = make_sigma(Family::P22, kNu2, {3, 2}, {});
  EXPECT_TRUE(check_dirac_schmid(c, "all", points()).pass);
}

TEST(DiracSchmid, NegativeControl) {
  InducingDatum c = make_sigma(Family::P22, kNu2, {3, 2}, {});
  PdeOptions bad;
  bad.nu_shift = 0.1;
  IdentityReport r = check_dirac_schmid(c, "all", points(), bad);
  EXPECT_GT(r.max_rel_err, 1e-3);
}

TEST(DiracSchmid, Preconditions) {
  InducingDatum sg = make_sigma(Family::P22, kNu2, {2, 2}, {});
  try {
    ds_operators_ii(sg, GenIndex{}, {});
    FAIL() << "expected PreconditionViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolation);
  }
  InducingDatum s2 = make_sigma(Family::P211, kNu3, {2}, {0, 0});
  try {
    ds_operators_ii(s2, 5 * unit(1), {});
    FAIL() << "expected InvalidIndex";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidIndex);
  }
  EXPECT_THROW(ds_operators_iii(s2, GenIndex{}, {}), Error);
}

TEST(Samples, DeterministicAndInBox) {
  auto a = sample_points(4, 11), b = sample_points(4, 11);
  EXPECT_EQ(a, b);
  for (const auto& s : a)
    for (const auto& z : s) {
      EXPECT_GE(z.real(), 2.5);
      EXPECT_LE(z.real(), 3.5);
      EXPECT_LE(std::abs(z.imag()), 1.0);
    }
  EXPECT_NE(sample_points(1, 12), sample_points(1, 11));
}
