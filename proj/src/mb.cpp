#include "gl4/mb.hpp"

#include <cmath>

namespace gl4 {

namespace {

bool at_pole(GammaKind k, cplx z) {
  return k == GammaKind::R ? near_nonpositive_integer(0.5 * z, 0.5 * kPoleRadius) : near_nonpositive_integer(z);
}

}  // namespace

cplx log_factor_product(const std::vector<LinFactor>& fs, bool& zero) {
  cplx s = 0.0;
  zero = false;
  for (const auto& f : fs) {
    if (f.exp < 0 && at_pole(f.kind, f.b)) {
      zero = true;
      return 0.0;
    }
    s += double(f.exp) * log_gamma_kind(f.kind, f.b);
  }
  return s;
}

std::vector<Strip> mb_strips(const MBTerm& t, int v) {
  std::vector<Strip> out;
  for (const auto& f : t.inner) {
    if (f.exp <= 0 || f.a[v] == 0.0) continue;
    if (f.a[1 - v] != 0.0)
      throw Error(ErrorCode::DomainViolation, "numerator factor couples two contour variables");
    Strip s;
    double bound = -f.b.real() / f.a[v];
    s.description = std::string(f.kind == GammaKind::R ? "Gamma_R" : "Gamma_C") + " argument";
    if (f.a[v] > 0)
      s.lower = bound;
    else
      s.upper = bound;
    out.push_back(s);
  }
  return out;
}

KernelValue eval_mb(const MBTerm& t, double tol, const QuadConfig& cfg) {
  if (t.coef == cplx(0.0)) return {0.0, 0.0};
  bool zero = false;
  cplx lo = log_factor_product(t.outer, zero);
  if (zero) return {0.0, 0.0};
  if (t.nvars == 0 || t.inner.empty()) {
    cplx li = log_factor_product(t.inner, zero);
    if (zero) return {0.0, 0.0};
    return {t.coef * std::exp(lo + li), 0.0};
  }
  if (tol <= 0) tol = cfg.tol_for_dim(t.nvars);
  if (t.nvars == 1) {
    ContourSpec spec = choose_contour(mb_strips(t, 0), cfg);
    auto f = [&](cplx q) -> cplx {
      cplx s = lo;
      for (const auto& g : t.inner) {
        cplx z = g.a[0] * q + g.b;
        if (g.exp < 0 && at_pole(g.kind, z)) return 0.0;
        s += double(g.exp) * log_gamma_kind(g.kind, z);
      }
      return std::exp(s);
    };
    KernelValue kv = integrate_vertical(f, spec, tol);
    return t.coef * kv;
  }
  std::vector<ContourSpec> specs = {choose_contour(mb_strips(t, 0), cfg), choose_contour(mb_strips(t, 1), cfg)};
  auto f = [&](const std::vector<cplx>& z) -> cplx {
    cplx s = lo;
    for (const auto& g : t.inner) {
      cplx w = g.a[0] * z[0] + g.a[1] * z[1] + g.b;
      if (g.exp < 0 && at_pole(g.kind, w)) return 0.0;
      s += double(g.exp) * log_gamma_kind(g.kind, w);
    }
    return std::exp(s);
  };
  KernelValue kv = integrate_vertical_multi(f, specs, tol);
  return t.coef * kv;
}

KernelValue eval_mb_sum(const std::vector<MBTerm>& ts, double tol, const QuadConfig& cfg) {
  KernelValue acc;
  for (const auto& t : ts) acc = acc + eval_mb(t, tol, cfg);
  return acc;
}

}  // namespace gl4
