#include "gl4/lfactors.hpp"

#include <cstdlib>
#include <sstream>

namespace gl4 {

int WeilRep::dim() const {
  int d = 0;
  for (const auto& it : items) d += it.two_dim ? 2 : 1;
  return d;
}

namespace {

WeilItem chr(cplx nu, int delta) { return {false, nu, delta, 0}; }

void push_two(WeilRep& r, cplx nu, int kappa) {
  if (kappa == 0) {
    r.items.push_back(chr(nu, 0));
    r.items.push_back(chr(nu, 1));
  } else {
    r.items.push_back({true, nu, 0, kappa});
  }
}

}  // namespace

WeilRep langlands_parameter(const InducingDatum& s) {
  WeilRep r;
  switch (s.family) {
    case Family::P1111:
      for (int i = 0; i < 4; ++i) r.items.push_back(chr(s.nu[i], s.delta[i]));
      break;
    case Family::P211:
      r.items.push_back({true, s.nu[0], 0, s.k1 - 1});
      r.items.push_back(chr(s.nu[1], s.delta[0]));
      r.items.push_back(chr(s.nu[2], s.delta[1]));
      break;
    case Family::P22:
      r.items.push_back({true, s.nu[0], 0, s.k1 - 1});
      r.items.push_back({true, s.nu[1], 0, s.k2 - 1});
      break;
  }
  return r;
}

WeilRep exterior_square_parameter(const InducingDatum& s) {
  WeilRep r;
  switch (s.family) {
    case Family::P1111:
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) r.items.push_back(chr(s.nu[i] + s.nu[j], std::abs(s.delta[i] - s.delta[j])));
      break;
    case Family::P211:
      push_two(r, s.nu[0] + s.nu[1], s.k1 - 1);
      push_two(r, s.nu[0] + s.nu[2], s.k1 - 1);
      r.items.push_back(chr(2.0 * s.nu[0], s.d1));
      r.items.push_back(chr(s.nu[1] + s.nu[2], std::abs(s.delta[0] - s.delta[1])));
      break;
    case Family::P22:
      push_two(r, s.nu[0] + s.nu[1], std::abs(s.k1 - s.k2));
      push_two(r, s.nu[0] + s.nu[1], s.k1 + s.k2 - 2);
      r.items.push_back(chr(2.0 * s.nu[0], s.d1));
      r.items.push_back(chr(2.0 * s.nu[1], s.d2));
      break;
  }
  return r;
}

std::vector<GammaShift> l_factor_gammas(const WeilRep& r) {
  std::vector<GammaShift> g;
  for (const auto& it : r.items) {
    if (it.two_dim)
      g.push_back({GammaKind::C, it.nu + 0.5 * it.kappa});
    else
      g.push_back({GammaKind::R, it.nu + double(it.delta)});
  }
  return g;
}

cplx log_eval_gammas(const std::vector<GammaShift>& g, cplx s) {
  cplx acc = 0.0;
  for (const auto& f : g) acc += log_gamma_kind(f.kind, s + f.shift);
  return acc;
}

cplx eval_gammas(const std::vector<GammaShift>& g, cplx s) { return std::exp(log_eval_gammas(g, s)); }

cplx l_factor(const WeilRep& r, cplx s) { return eval_gammas(l_factor_gammas(r), s); }

int epsilon_exponent(const WeilRep& r) {
  int e = 0;
  for (const auto& it : r.items) e += it.two_dim ? it.kappa + 1 : it.delta;
  return ((e % 4) + 4) % 4;
}

cplx i_power(int n) {
  static const cplx p[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return p[((n % 4) + 4) % 4];
}

LFactorSet lfactor_set(const InducingDatum& s) {
  LFactorSet f;
  WeilRep a = langlands_parameter(s), b = exterior_square_parameter(s);
  f.std_gammas = l_factor_gammas(a);
  f.ext_gammas = l_factor_gammas(b);
  f.eps_std = epsilon_exponent(a);
  f.eps_ext = epsilon_exponent(b);
  return f;
}

std::string gammas_str(const std::vector<GammaShift>& g) {
  std::string out;
  for (const auto& f : g) {
    if (!out.empty()) out += " ";
    out += std::string(f.kind == GammaKind::R ? "Gamma_R" : "Gamma_C") + "(s";
    if (f.shift != cplx(0.0)) out += "+" + format_complex(f.shift, 8);
    out += ")";
  }
  return out;
}

std::string weil_str(const WeilRep& r) {
  std::string out;
  for (const auto& it : r.items) {
    if (!out.empty()) out += " + ";
    if (it.two_dim)
      out += "phi[" + format_complex(it.nu, 8) + "," + std::to_string(it.kappa) + "]";
    else
      out += "phi^" + std::to_string(it.delta) + "[" + format_complex(it.nu, 8) + "]";
  }
  return out;
}

}  // namespace gl4
