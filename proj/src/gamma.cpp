#include "gl4/gamma.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace gl4 {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::PoleAt: return "PoleAt";
    case ErrorCode::InfeasibleStrip: return "InfeasibleStrip";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NaNEncountered: return "NaNEncountered";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::InconsistentRelations: return "InconsistentRelations";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Error";
}

std::string format_complex(cplx z, int digits) {
  char buf[96];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, z.real() + 0.0);
  } else {
    std::snprintf(buf, sizeof buf, "%.*g%+.*gi", digits, z.real() + 0.0, digits, z.imag() + 0.0);
  }
  return buf;
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogPi = 1.1447298858494002;      // log(pi)
constexpr double kLog2Pi = 1.8378770664093453;     // log(2 pi)
constexpr double kHalfLog2Pi = 0.91893853320467274;

// Lanczos, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lanczos_log(cplx s) {
  // log Gamma(s) for Re s >= 0.5
  cplx z = s - 1.0;
  cplx x = kLanczos[0];
  for (int k = 1; k < 9; ++k) x += kLanczos[k] / (z + double(k));
  cplx t = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(w), safe for large |Im w|.
cplx log_sin(cplx w) {
  const cplx I(0.0, 1.0);
  if (std::abs(w.imag()) < 30.0) return std::log(std::sin(w));
  if (w.imag() > 0) return -I * w + std::log(cplx(0.0, 0.5)) + std::log(1.0 - std::exp(2.0 * I * w));
  return I * w - std::log(cplx(0.0, 2.0)) + std::log(1.0 - std::exp(-2.0 * I * w));
}

void check_finite(cplx s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw Error(ErrorCode::NaNEncountered, "non-finite gamma argument " + format_complex(s));
}

cplx log_gamma_upper(cplx s) {
  // Im s >= 0 branch; mirrored for the lower half plane so that conjugate symmetry is exact.
  if (s.real() < 0.5) return kLogPi - log_sin(kPi * s) - lanczos_log(1.0 - s);
  return lanczos_log(s);
}

cplx gamma_upper(cplx s) {
  if (s.real() >= 0.5) return std::exp(lanczos_log(s));
  if (std::abs(s.imag()) > 100.0) return std::exp(log_gamma_upper(s));
  return kPi / (std::sin(kPi * s) * std::exp(lanczos_log(1.0 - s)));
}

}  // namespace

bool near_nonpositive_integer(cplx s, double radius) {
  if (s.real() > 0.5) return false;
  double n = std::round(s.real());
  if (n > 0) return false;
  return std::abs(s - cplx(n, 0.0)) < radius;
}

cplx log_gamma(cplx s) {
  check_finite(s);
  if (near_nonpositive_integer(s)) throw Error(ErrorCode::PoleAt, "Gamma pole at " + format_complex(s));
  if (s.imag() < 0) return std::conj(log_gamma_upper(std::conj(s)));
  return log_gamma_upper(s);
}

cplx gamma(cplx s) {
  check_finite(s);
  if (near_nonpositive_integer(s)) throw Error(ErrorCode::PoleAt, "Gamma pole at " + format_complex(s));
  if (s.imag() < 0) return std::conj(gamma_upper(std::conj(s)));
  return gamma_upper(s);
}

cplx gamma_R(cplx s) {
  check_finite(s);
  if (near_nonpositive_integer(0.5 * s, 0.5 * kPoleRadius))
    throw Error(ErrorCode::PoleAt, "Gamma_R pole at " + format_complex(s));
  return std::exp(-0.5 * kLogPi * s) * gamma(0.5 * s);
}

cplx gamma_C(cplx s) {
  check_finite(s);
  if (near_nonpositive_integer(s)) throw Error(ErrorCode::PoleAt, "Gamma_C pole at " + format_complex(s));
  return 2.0 * std::exp(-kLog2Pi * s) * gamma(s);
}

cplx log_gamma_R(cplx s) {
  check_finite(s);
  if (near_nonpositive_integer(0.5 * s, 0.5 * kPoleRadius))
    throw Error(ErrorCode::PoleAt, "Gamma_R pole at " + format_complex(s));
  return -0.5 * kLogPi * s + log_gamma(0.5 * s);
}

cplx log_gamma_C(cplx s) {
  check_finite(s);
  if (near_nonpositive_integer(s)) throw Error(ErrorCode::PoleAt, "Gamma_C pole at " + format_complex(s));
  return std::numbers::ln2 - kLog2Pi * s + log_gamma(s);
}

cplx log_gamma_kind(GammaKind k, cplx s) { return k == GammaKind::R ? log_gamma_R(s) : log_gamma_C(s); }
cplx gamma_kind(GammaKind k, cplx s) { return k == GammaKind::R ? gamma_R(s) : gamma_C(s); }

cplx pochhammer(cplx a, int i) {
  check_finite(a);
  if (i == 0) return 1.0;
  if (std::abs(i) <= 64) {
    cplx r = 1.0;
    if (i > 0) {
      for (int k = 0; k < i; ++k) r *= a + double(k);
    } else {
      for (int k = 1; k <= -i; ++k) {
        cplx d = a - double(k);
        if (std::abs(d) < kPoleRadius)
          throw Error(ErrorCode::PoleAt, "Pochhammer (" + format_complex(a) + ")_" + std::to_string(i));
        r /= d;
      }
    }
    return r;
  }
  bool pa = near_nonpositive_integer(a), pb = near_nonpositive_integer(a + double(i));
  if (pb) throw Error(ErrorCode::PoleAt, "Pochhammer (" + format_complex(a) + ")_" + std::to_string(i));
  if (pa) return 0.0;
  return std::exp(log_gamma(a + double(i)) - log_gamma(a));
}

double binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  if (n <= 60) {
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int j = 1; j <= k; ++j) r = r * (unsigned)(n - k + j) / (unsigned)j;
    return double(r);
  }
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

}  // namespace gl4
