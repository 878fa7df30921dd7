#pragma once

#include "gl4/error.hpp"

namespace gl4 {

enum class GammaKind { R, C };

// Distance below which an argument is treated as sitting on a pole.
inline constexpr double kPoleRadius = 1e-12;

cplx gamma(cplx s);
cplx log_gamma(cplx s);

// Gamma_R(s) = pi^{-s/2} Gamma(s/2), Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s).
cplx gamma_R(cplx s);
cplx gamma_C(cplx s);
cplx log_gamma_R(cplx s);
cplx log_gamma_C(cplx s);
cplx log_gamma_kind(GammaKind k, cplx s);
cplx gamma_kind(GammaKind k, cplx s);

// Gamma(a+i)/Gamma(a).
cplx pochhammer(cplx a, int i);

// Binomial coefficient as a double; exact for n <= 60.
double binomial(int n, int k);

bool near_nonpositive_integer(cplx s, double radius = kPoleRadius);

}  // namespace gl4
