#include <gtest/gtest.h>

#include <random>

#include "gl4/identities.hpp"
#include "gl4/kernels.hpp"
#include "oracle.hpp"

using namespace gl4;

namespace {

cplx rnd(std::mt19937_64& g, double lo, double hi) {
  std::uniform_real_distribution<double> re(lo, hi), im(-1, 1);
  return {re(g), im(g)};
}

const Identity& corpus_entry(const std::vector<Identity>& ids, const std::string& name) {
  for (const auto& id : ids)
    if (id.name == name) return id;
  throw std::runtime_error("missing corpus entry " + name);
}

}  // namespace

TEST(Barnes, FirstIntegralAgainstDirectSum) {
  std::mt19937_64 g(3);
  for (int k = 0; k < 5; ++k) {
    cplx a1 = rnd(g, 0.4, 1.5), a2 = rnd(g, 0.4, 1.5), b1 = rnd(g, 0.4, 1.5), b2 = rnd(g, 0.4, 1.5);
    auto f = [&](cplx z) {
      return oracle::gamma_R(a1 + z) * oracle::gamma_R(a2 + z) * oracle::gamma_R(b1 - z) * oracle::gamma_R(b2 - z);
    };
    cplx direct = oracle::vertical(f, 0.0);
    cplx closed = oracle::gamma_R(a1 + b1) * oracle::gamma_R(a1 + b2) * oracle::gamma_R(a2 + b1) *
                  oracle::gamma_R(a2 + b2) / oracle::gamma_R(a1 + a2 + b1 + b2);
    EXPECT_LT(rel_diff(direct, closed), 1e-9);
    EXPECT_LT(rel_diff(barnes_first(a1, a2, b1, b2), closed), 1e-12);
    EXPECT_LT(rel_diff(eval_mb(barnes_first_integral(a1, a2, b1, b2), 1e-11).value, closed), 1e-9);
  }
}

TEST(Barnes, SecondIntegralMatchesClosedForm) {
  std::mt19937_64 g(4);
  for (int k = 0; k < 5; ++k) {
    cplx a1 = rnd(g, 0.4, 1.5), a2 = rnd(g, 0.4, 1.5), b1 = rnd(g, 0.4, 1.5), b2 = rnd(g, 0.4, 1.5),
         b3 = rnd(g, 0.4, 1.5);
    EXPECT_LT(rel_diff(eval_mb(barnes_second_integral(a1, a2, b1, b2, b3), 1e-11).value,
                       barnes_second(a1, a2, b1, b2, b3)),
              1e-9);
  }
}

TEST(Barnes, DomainChecks) {
  EXPECT_THROW(barnes_first(-1.0, 0.2, 0.3, 0.4), Error);
  EXPECT_THROW(saalschutz_check(1.0, 1.0, 1.0, 2), Error);
}

TEST(Saalschutz, SmallM) {
  std::mt19937_64 g(5);
  for (int m = 0; m <= 5; ++m) {
    IdentityReport r = saalschutz_check(rnd(g, 0.3, 2.0), rnd(g, 0.3, 2.0), rnd(g, 2.0 * m + 0.3, 2.0 * m + 2.0), m);
    EXPECT_TRUE(r.pass) << r.max_rel_err;
  }
}

TEST(Saalschutz, SingleSampleReport) {
  IdentityReport r = saalschutz_check(0.7, 1.1, 0.9, 0);
  EXPECT_EQ(r.samples, 1);
  EXPECT_LT(r.max_rel_err, 1e-13);
}

TEST(Corpus, LoadsAndVerifies) {
  auto ids = load_corpus(default_corpus_path());
  ASSERT_GE(ids.size(), 15u);
  for (const char* n : {"Um_recursion_m1", "shift_12vs23", "V0_equals_U0", "U0_weyl_3412"}) {
    IdentityReport r = verify_identity(corpus_entry(ids, n), 2, 9);
    EXPECT_TRUE(r.pass) << n << " " << r.max_rel_err;
  }
}

TEST(Corpus, FalseIdentityFails) {
  auto ids = load_corpus(default_corpus_path());
  Identity bad = corpus_entry(ids, "Um_recursion_m1");
  bad.rhs[0].coef = Poly(1.01);
  IdentityReport r = verify_identity(bad, 2, 9);
  EXPECT_FALSE(r.pass);
  EXPECT_NEAR(r.max_rel_err, 0.01 / 1.01, 1e-6);
}

TEST(Corpus, ParseErrors) {
  EXPECT_TRUE(parse_corpus(R"({"schema_version": 1, "identities": []})").empty());
  EXPECT_THROW(parse_corpus(R"({"schema_version": 2, "identities": []})"), Error);
  EXPECT_THROW(parse_corpus("not json"), Error);
}

TEST(UKernel, MatchesDirectContourSum) {
  Mu4 mu = {cplx(0.11, 0.02), cplx(-0.07, 0.03), cplx(0.05, -0.01), cplx(-0.12, 0.04)};
  S3 s = {cplx(2.2, 0.3), cplx(2.6, -0.2), cplx(3.1, 0.1)};
  auto gamma_R = [](cplx z) { return oracle::gamma_R(z); };
  cplx S = mu[0] + mu[1] + mu[2] + mu[3];
  cplx outer = gamma_R(s[0] + mu[0]) * gamma_R(s[0] + mu[1]) * gamma_R(s[1] + mu[0] + mu[1]) *
               gamma_R(s[1] + mu[2] + mu[3]) * gamma_R(s[2] + mu[0] + mu[2] + mu[3]) *
               gamma_R(s[2] + mu[1] + mu[2] + mu[3]);
  auto f = [&](cplx q) {
    return gamma_R(s[0] - q) * gamma_R(s[1] + mu[0] - q) * gamma_R(s[1] + mu[1] - q) *
           gamma_R(s[2] + mu[0] + mu[1] - q) * gamma_R(mu[2] + q) * gamma_R(mu[3] + q) /
           (gamma_R(s[0] + s[1] + mu[0] + mu[1] - q) * gamma_R(s[1] + s[2] + S - q));
  };
  cplx direct = outer * oracle::vertical(f, 0.5);
  EXPECT_LT(rel_diff(kernel_U(0, s, mu, 1e-11).value, direct), 1e-9);
}
