#pragma once

#include <vector>

#include "gl4/gamma.hpp"
#include "gl4/quadrature.hpp"

namespace gl4 {

// Gamma factor kind(a[0] z0 + a[1] z1 + b)^exp in up to two contour variables.
struct LinFactor {
  GammaKind kind = GammaKind::R;
  int exp = 1;
  cplx b = 0.0;
  double a[2] = {0.0, 0.0};
};

inline LinFactor gR(cplx b, int exp = 1) { return {GammaKind::R, exp, b, {0.0, 0.0}}; }
inline LinFactor gC(cplx b, int exp = 1) { return {GammaKind::C, exp, b, {0.0, 0.0}}; }
inline LinFactor gRq(double a, cplx b, int exp = 1) { return {GammaKind::R, exp, b, {a, 0.0}}; }
inline LinFactor gCq(double a, cplx b, int exp = 1) { return {GammaKind::C, exp, b, {a, 0.0}}; }

// coef * prod(outer) * (4 pi i)^{-n} \int ... \int prod(inner), n = number of contour variables used.
struct MBTerm {
  cplx coef = 1.0;
  std::vector<LinFactor> outer;
  std::vector<LinFactor> inner;
  int nvars = 0;  // 0, 1 or 2
};

// Re-part constraints on contour variable v implied by the inner numerator factors.
std::vector<Strip> mb_strips(const MBTerm& t, int v);

// log of a product of constant factors; sets zero = true when a denominator factor sits on a pole.
cplx log_factor_product(const std::vector<LinFactor>& fs, bool& zero);

KernelValue eval_mb(const MBTerm& t, double tol = -1.0, const QuadConfig& cfg = default_quad_config());
KernelValue eval_mb_sum(const std::vector<MBTerm>& ts, double tol = -1.0,
                        const QuadConfig& cfg = default_quad_config());

}  // namespace gl4
