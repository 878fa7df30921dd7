#pragma once

#include <string>
#include <vector>

#include "gl4/gamma.hpp"
#include "gl4/sigma.hpp"

namespace gl4 {

// phi^delta_nu (dim 1) or phi_{nu,kappa} (dim 2).
struct WeilItem {
  bool two_dim = false;
  cplx nu = 0.0;
  int delta = 0;
  int kappa = 0;
};

struct WeilRep {
  std::vector<WeilItem> items;
  int dim() const;
};

struct GammaShift {
  GammaKind kind = GammaKind::R;
  cplx shift = 0.0;  // factor kind(s + shift)
};

struct LFactorSet {
  std::vector<GammaShift> std_gammas, ext_gammas;
  int eps_std = 0, eps_ext = 0;  // exponents of sqrt(-1), reduced mod 4
};

WeilRep langlands_parameter(const InducingDatum& s);
// phi_{nu,0} summands are split into phi^0_nu + phi^1_nu.
WeilRep exterior_square_parameter(const InducingDatum& s);

std::vector<GammaShift> l_factor_gammas(const WeilRep& r);
cplx l_factor(const WeilRep& r, cplx s);
cplx eval_gammas(const std::vector<GammaShift>& g, cplx s);
cplx log_eval_gammas(const std::vector<GammaShift>& g, cplx s);
int epsilon_exponent(const WeilRep& r);
LFactorSet lfactor_set(const InducingDatum& s);
cplx i_power(int n);

std::string gammas_str(const std::vector<GammaShift>& g);
std::string weil_str(const WeilRep& r);

}  // namespace gl4
