#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gl4/gamma.hpp"
#include "gl4/mb.hpp"
#include "gl4/poly.hpp"
#include "gl4/report.hpp"

namespace gl4 {

struct GammaFactorSym {
  GammaKind kind = GammaKind::R;
  Poly arg;
  int exponent = 1;
};

// prod kind(arg)^exponent * (2 pi)^two_pi_power * prefactor
struct GammaExpr {
  std::vector<GammaFactorSym> factors;
  int two_pi_power = 0;
  Poly prefactor = Poly(1.0);
};

cplx eval_gamma_expr(const GammaExpr& e, const Point& pt);

cplx barnes_first(cplx a1, cplx a2, cplx b1, cplx b2);
cplx barnes_second(cplx a1, cplx a2, cplx b1, cplx b2, cplx b3);
// Barnes integrands as single-contour terms (value = left-hand side).
MBTerm barnes_first_integral(cplx a1, cplx a2, cplx b1, cplx b2);
MBTerm barnes_second_integral(cplx a1, cplx a2, cplx b1, cplx b2, cplx b3);

IdentityReport saalschutz_check(cplx a, cplx b, cplx c, int m, double tol = 1e-10);

// One side term: coef * outer * (4 pi i)^{-k} \int integrand d(ivars), all gamma parts
// evaluated at the point shifted by `shift`; coef is evaluated unshifted.
struct IdTerm {
  Poly coef = Poly(1.0);
  GammaExpr outer;
  std::vector<std::string> ivars;
  GammaExpr integrand;
  std::map<std::string, int> shift;
};

struct VarBox {
  std::string name;
  double re_lo = 1.5, re_hi = 3.0, im_lo = -1.0, im_hi = 1.0;
};

struct Identity {
  std::string name;
  std::string description;
  std::vector<VarBox> vars;
  Point consts;
  std::vector<IdTerm> lhs, rhs;
  double tol = 1e-8;
};

// U_m(s; mu) and U'(s; mu) as identity terms; arguments are expressions in the free variables.
IdTerm make_U_term(const Poly& coef, const Poly& m, const std::vector<Poly>& s, const std::vector<Poly>& mu);
IdTerm make_Uprime_term(const Poly& coef, const std::vector<Poly>& s, const std::vector<Poly>& mu);

KernelValue eval_side(const std::vector<IdTerm>& side, const Point& pt, double tol = -1.0);

IdentityReport verify_identity(const std::vector<IdTerm>& lhs, const std::vector<IdTerm>& rhs,
                               const std::vector<VarBox>& free_vars, const Point& consts, int n_samples, double tol,
                               std::uint64_t seed = 1);
IdentityReport verify_identity(const Identity& id, int n_samples, std::uint64_t seed = 1, double tol = -1.0);

// Versioned JSON corpus, see data/identities.json and README.
std::vector<Identity> parse_corpus(const std::string& json_text);
std::vector<Identity> load_corpus(const std::string& path);
std::string default_corpus_path();

}  // namespace gl4
