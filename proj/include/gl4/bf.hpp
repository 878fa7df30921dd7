#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gl4/kernels.hpp"
#include "gl4/lfactors.hpp"
#include "gl4/pde.hpp"
#include "gl4/report.hpp"

namespace gl4 {

// Case tags 1a..1e, 2a..2f, 3a..3c.
const std::vector<std::string>& bf_case_tags();

struct BFCase {
  InducingDatum sigma;
  std::string tag;
  int b = 0;
};

// Tag determined by the family and the parities of sigma.
std::string bf_case_tag(const InducingDatum& sigma);
// Throws DomainViolation when tag and sigma disagree, UnsupportedCase for an unknown tag.
BFCase make_bf_case(const InducingDatum& sigma, const std::string& tag);
// Small default parameters (kappa1 <= 5, kappa2 <= 3, generic nu).
BFCase default_bf_case(const std::string& tag);

// V'(s) = sum coef * V_{sigma,l}(s + shift). from_k marks pieces that change sign for the contragredient.
struct BFTerm {
  cplx coef = 1.0;
  Shift3 shift{0, 0, 0};
  GenIndex l{};
  bool from_k = false;
};

std::vector<BFTerm> bf_terms(const BFCase& c);

KernelValue bf_kernel_Vprime(const BFCase& c, const S3& s, double tol = -1.0);
// Contragredient kernel: the same pieces with V_{sigma~,l} and the contragredient sign bookkeeping.
KernelValue bf_kernel_Vprime_contragredient(const BFCase& c, const S3& s, double tol = -1.0);

// Gamma_R(2 s2 + gamma_1 + b) V'(s1, s2, s1 + s2)
KernelValue bf_zeta(const BFCase& c, cplx s1, cplx s2, double tol = -1.0);
// Z(u1, u2, W~, Phi^) = i^b Gamma_R(2 u2 - gamma_1 + b) V~'(u1, u2, u1 + u2)
KernelValue bf_zeta_contragredient(const BFCase& c, cplx u1, cplx u2, double tol = -1.0);

// L(s1, Pi) L(s2, Pi, wedge^2)
cplx bf_lproduct(const InducingDatum& sigma, cplx s1, cplx s2);
// eps_std eps_ext L(u1, Pi~) L(u2, Pi~, wedge^2)
cplx bf_contragredient_rhs(const InducingDatum& sigma, cplx u1, cplx u2);

struct BFOptions {
  double re_lo = 1.8, re_hi = 3.0;
  double tol = 1e-6;
  std::uint64_t seed = 1;
  cplx nu_perturbation = 0.0;  // added to nu[0] inside V' only (negative control)
};

IdentityReport bf_verify(const BFCase& c, int n_samples, const BFOptions& opt = {});
// Samples u = 1 - s with Re u in [re_lo, re_hi].
IdentityReport bf_verify_contragredient(const BFCase& c, int n_samples, const BFOptions& opt = {});

}  // namespace gl4
