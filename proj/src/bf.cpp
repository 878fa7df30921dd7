#include "gl4/bf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace gl4 {

namespace {

constexpr double kInvTwoPi = 0.5 / std::numbers::pi;

GenIndex e(int i) { return unit(i); }
GenIndex e(int i, int j) { return unit(i, j); }
const GenIndex kZero{};

struct TermList {
  std::vector<BFTerm> t;
  void add(cplx coef, const GenIndex& l, Shift3 sh = {0, 0, 0}, bool from_k = false) {
    if (coef == cplx(0.0)) return;
    t.push_back({coef, sh, l, from_k});
  }
};

InducingDatum perturbed(const InducingDatum& s, cplx d) {
  if (d == cplx(0.0)) return s;
  std::vector<cplx> nu = s.nu;
  nu[0] += d;
  return make_sigma(s.family, nu, s.kappa, s.delta);
}

}  // namespace

const std::vector<std::string>& bf_case_tags() {
  static const std::vector<std::string> tags = {"1a", "1b", "1c", "1d", "1e", "2a", "2b",
                                                "2c", "2d", "2e", "2f", "3a", "3b", "3c"};
  return tags;
}

std::string bf_case_tag(const InducingDatum& s) {
  switch (s.family) {
    case Family::P1111: {
      int sum = s.delta[0] + s.delta[1] + s.delta[2] + s.delta[3];
      return std::string("1") + char('a' + sum);
    }
    case Family::P211: {
      bool even = s.k1 % 2 == 0;
      if (s.delta[0] == 0 && s.delta[1] == 0) return even ? "2a" : "2b";
      if (s.delta[0] == 1 && s.delta[1] == 1) return even ? "2c" : "2d";
      return even ? "2e" : "2f";
    }
    case Family::P22: {
      int p1 = s.k1 % 2, p2 = s.k2 % 2;
      if (p1 != p2) return "3c";
      return p1 == 0 ? "3a" : "3b";
    }
  }
  return "?";
}

BFCase make_bf_case(const InducingDatum& sigma, const std::string& tag) {
  const auto& tags = bf_case_tags();
  if (std::find(tags.begin(), tags.end(), tag) == tags.end())
    throw Error(ErrorCode::UnsupportedCase, "unknown case tag '" + tag + "'");
  std::string actual = bf_case_tag(sigma);
  if (actual != tag)
    throw Error(ErrorCode::DomainViolation, "case tag " + tag + " does not match " + sigma.str() + " (" + actual + ")");
  return {sigma, tag, b_parity(sigma)};
}

BFCase default_bf_case(const std::string& tag) {
  const std::vector<cplx> nu4 = {cplx(0.13, 0.02), cplx(-0.08, 0.05), cplx(0.05, -0.03), cplx(-0.11, 0.01)};
  const std::vector<cplx> nu3 = {cplx(0.07, 0.03), cplx(-0.09, 0.04), cplx(0.12, -0.02)};
  const std::vector<cplx> nu2 = {cplx(0.06, 0.04), cplx(-0.07, -0.03)};
  InducingDatum s;
  if (tag == "1a") s = make_sigma(Family::P1111, nu4, {}, {0, 0, 0, 0});
  else if (tag == "1b") s = make_sigma(Family::P1111, nu4, {}, {1, 0, 0, 0});
  else if (tag == "1c") s = make_sigma(Family::P1111, nu4, {}, {1, 1, 0, 0});
  else if (tag == "1d") s = make_sigma(Family::P1111, nu4, {}, {1, 1, 1, 0});
  else if (tag == "1e") s = make_sigma(Family::P1111, nu4, {}, {1, 1, 1, 1});
  else if (tag == "2a") s = make_sigma(Family::P211, nu3, {4}, {0, 0});
  else if (tag == "2b") s = make_sigma(Family::P211, nu3, {3}, {0, 0});
  else if (tag == "2c") s = make_sigma(Family::P211, nu3, {4}, {1, 1});
  else if (tag == "2d") s = make_sigma(Family::P211, nu3, {3}, {1, 1});
  else if (tag == "2e") s = make_sigma(Family::P211, nu3, {4}, {1, 0});
  else if (tag == "2f") s = make_sigma(Family::P211, nu3, {5}, {1, 0});
  else if (tag == "3a") s = make_sigma(Family::P22, nu2, {4, 2}, {});
  else if (tag == "3b") s = make_sigma(Family::P22, nu2, {5, 3}, {});
  else if (tag == "3c") s = make_sigma(Family::P22, nu2, {4, 3}, {});
  else throw Error(ErrorCode::UnsupportedCase, "unknown case tag '" + tag + "'");
  return make_bf_case(s, tag);
}

std::vector<BFTerm> bf_terms(const BFCase& c) {
  const InducingDatum& s = c.sigma;
  const int k1 = s.k1, k2 = s.k2;
  const Shift3 S1{1, 0, 0}, S2{0, 1, 0}, S3_{0, 0, 1};
  TermList T;
  const std::string& g = c.tag;
  if (g == "1a") {
    T.add(1.0, kZero);
  } else if (g == "1b") {
    T.add(1.0, e(4));
  } else if (g == "1c") {
    T.add(1.0, e(1, 2), S1);
    T.add(1.0, e(2, 3), S2);
    T.add(1.0, e(3, 4), S3_);
  } else if (g == "1d") {
    T.add(1.0, e(1), S2);
    T.add(1.0, e(3), S1);
  } else if (g == "1e") {
    T.add(1.0, kZero, {1, 0, 1});
  } else if (g == "2a") {
    const int n = k1 / 2;
    for (int j = 0; j <= n; ++j) T.add(binomial(n, j), 2 * j * e(1) + (k1 - 2 * j) * e(3));
  } else if (g == "2b") {
    const int n = (k1 - 1) / 2;
    for (int j = 0; j <= n; ++j) T.add(binomial(n, j), 2 * j * e(1) + (k1 - 2 * j - 1) * e(3) + e(4));
  } else if (g == "2c") {
    const int n = (k1 - 2) / 2;
    for (int j = 0; j <= n; ++j) {
      double b = binomial(n, j);
      T.add(b, 2 * j * e(1) + (k1 - 2 * j - 1) * e(3) + e(4), S1);
      T.add(b, (2 * j + 1) * e(1) + (k1 - 2 * j - 2) * e(3) + e(4), S2);
      T.add(b, (2 * j + 1) * e(1) + e(2) + (k1 - 2 * j - 2) * e(3), S3_);
      if (k1 - 2 * j - 2 > 0)
        T.add(-b * kInvTwoPi * double(k1 - 2 * j - 2), (2 * j + 1) * e(1) + e(2) + (k1 - 2 * j - 3) * e(3) + e(4),
              {0, 0, 0}, true);
    }
  } else if (g == "2d") {
    const int n = (k1 - 1) / 2;
    for (int j = 0; j <= n; ++j) {
      double b = binomial(n, j);
      T.add(b, (2 * j + 1) * e(1) + (k1 - 2 * j - 1) * e(3), S2);
      T.add(b, 2 * j * e(1) + (k1 - 2 * j) * e(3), S1);
      if (j > 0)
        T.add(-b * kInvTwoPi * double(2 * j), (2 * j - 1) * e(1) + e(2) + (k1 - 2 * j) * e(3), {0, 0, 0}, true);
    }
  } else if (g == "2e") {
    const int n = (k1 - 2) / 2;
    for (int j = 0; j <= n; ++j) T.add(binomial(n, j), 2 * j * e(1) + e(2) + (k1 - 2 * j - 2) * e(3) + e(2, 4));
  } else if (g == "2f") {
    const int n = (k1 - 1) / 2;
    for (int j = 0; j <= n; ++j) {
      double b = binomial(n, j);
      GenIndex base = 2 * j * e(1) + (k1 - 2 * j - 1) * e(3);
      T.add(b, base + e(1, 2), S1);
      T.add(b, base + e(2, 3), S2);
      T.add(b, base + e(3, 4), S3_);
      if (k1 - 2 * j - 1 > 0)
        T.add(-b * kInvTwoPi * double(k1 - 2 * j - 1), 2 * j * e(1) + e(2) + (k1 - 2 * j - 2) * e(3) + e(2, 3),
              {0, 0, 0}, true);
    }
  } else if (g == "3a") {
    const int n = (k1 - k2) / 2;
    for (int j = 0; j <= n; ++j) T.add(binomial(n, j), 2 * j * e(1) + (k1 - k2 - 2 * j) * e(3) + k2 * e(2, 4));
  } else if (g == "3b") {
    const int n = (k1 - k2) / 2;
    for (int j = 0; j <= n; ++j) {
      double b = binomial(n, j);
      GenIndex base = 2 * j * e(1) + (k1 - k2 - 2 * j) * e(3) + (k2 - 1) * e(2, 4);
      T.add(b, base + e(1, 2), S1);
      T.add(b, base + e(2, 3), S2);
      T.add(b, base + e(3, 4), S3_);
      if (k1 - k2 - 2 * j > 0)
        T.add(-b * kInvTwoPi * double(k1 - k2 - 2 * j),
              2 * j * e(1) + e(2) + (k1 - k2 - 2 * j - 1) * e(3) + (k2 - 1) * e(2, 4) + e(2, 3), {0, 0, 0}, true);
      if (k2 - 1 > 0)
        T.add(-b * kInvTwoPi * double(k2 - 1),
              2 * j * e(1) + (k1 - k2 - 2 * j) * e(3) + (k2 - 2) * e(2, 4) + e(2, 3) + e(3, 4), {0, 0, 0}, true);
    }
  } else if (g == "3c") {
    const int n = (k1 - k2 - 1) / 2;
    const int d1 = s.d1, d2 = s.d2;
    for (int j = 0; j <= n; ++j)
      T.add(binomial(n, j), 2 * j * e(1) + d2 * e(2) + (k1 - k2 - 2 * j - 1) * e(3) + d1 * e(4) + k2 * e(2, 4));
  } else {
    throw Error(ErrorCode::UnsupportedCase, "unknown case tag '" + g + "'");
  }
  for (const auto& t : T.t)
    if (!in_S(s.lambda, t.l))
      throw Error(ErrorCode::InvalidIndex, "case " + g + ": " + index_str(t.l) + " not in S_" + weight_str(s.lambda));
  return T.t;
}

namespace {

KernelValue sum_terms(const InducingDatum& kernel_sigma, const std::vector<BFTerm>& terms, const S3& s, double tol,
                      const InducingDatum* contragredient_of) {
  KernelValue acc;
  for (const auto& t : terms) {
    S3 p = {s[0] + double(t.shift[0]), s[1] + double(t.shift[1]), s[2] + double(t.shift[2])};
    cplx coef = t.coef;
    if (contragredient_of) {
      coef *= contragredient_radial_sign(*contragredient_of, t.l) / radial_sign(t.l);
      if (t.from_k) coef = -coef;
    }
    acc = acc + coef * kernel_sigma_l({kernel_sigma, t.l}, p, tol);
  }
  return acc;
}

}  // namespace

KernelValue bf_kernel_Vprime(const BFCase& c, const S3& s, double tol) {
  return sum_terms(c.sigma, bf_terms(c), s, tol, nullptr);
}

KernelValue bf_kernel_Vprime_contragredient(const BFCase& c, const S3& s, double tol) {
  return sum_terms(contragredient(c.sigma), bf_terms(c), s, tol, &c.sigma);
}

KernelValue bf_zeta(const BFCase& c, cplx s1, cplx s2, double tol) {
  cplx g = gamma_R(2.0 * s2 + c.sigma.gamma[0] + double(c.b));
  return g * bf_kernel_Vprime(c, {s1, s2, s1 + s2}, tol);
}

KernelValue bf_zeta_contragredient(const BFCase& c, cplx u1, cplx u2, double tol) {
  cplx g = i_power(c.b) * gamma_R(2.0 * u2 - c.sigma.gamma[0] + double(c.b));
  return g * bf_kernel_Vprime_contragredient(c, {u1, u2, u1 + u2}, tol);
}

cplx bf_lproduct(const InducingDatum& sigma, cplx s1, cplx s2) {
  LFactorSet f = lfactor_set(sigma);
  return std::exp(log_eval_gammas(f.std_gammas, s1) + log_eval_gammas(f.ext_gammas, s2));
}

cplx bf_contragredient_rhs(const InducingDatum& sigma, cplx u1, cplx u2) {
  LFactorSet f = lfactor_set(sigma);
  return i_power(f.eps_std + f.eps_ext) * bf_lproduct(contragredient(sigma), u1, u2);
}

namespace {

IdentityReport run(const BFCase& c, int n, const BFOptions& opt, bool contra) {
  IdentityReport rep;
  rep.name = std::string(contra ? "bf-contragredient " : "bf ") + c.tag;
  rep.tolerance = opt.tol;
  BFCase kc = c;
  kc.sigma = perturbed(c.sigma, opt.nu_perturbation);
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> re(opt.re_lo, opt.re_hi), im(-1.0, 1.0);
  for (int k = 0; k < n; ++k) {
    double a1 = re(rng), b1 = im(rng), a2 = re(rng), b2 = im(rng);
    cplx s1(a1, b1), s2(a2, b2);
    KernelValue z = contra ? bf_zeta_contragredient(kc, s1, s2) : bf_zeta(kc, s1, s2);
    cplx rhs = contra ? bf_contragredient_rhs(c.sigma, s1, s2) : bf_lproduct(c.sigma, s1, s2);
    std::string where = std::string(contra ? "u=(" : "s=(") + format_complex(s1, 6) + ", " + format_complex(s2, 6) + ")";
    rep.record(where, z.value, rhs, rel_diff(z.value, rhs));
    rep.err_est = std::max(rep.err_est, z.err_est / std::max(std::abs(z.value), 1e-300));
  }
  return rep;
}

}  // namespace

IdentityReport bf_verify(const BFCase& c, int n_samples, const BFOptions& opt) { return run(c, n_samples, opt, false); }

IdentityReport bf_verify_contragredient(const BFCase& c, int n_samples, const BFOptions& opt) {
  return run(c, n_samples, opt, true);
}

}  // namespace gl4
