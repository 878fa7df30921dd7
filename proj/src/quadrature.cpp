#include "gl4/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

namespace gl4 {

QuadConfig& default_quad_config() {
  static QuadConfig cfg;
  return cfg;
}

Strip intersect(const std::vector<Strip>& constraints) {
  Strip out;
  for (const auto& c : constraints) {
    out.lower = std::max(out.lower, c.lower);
    out.upper = std::min(out.upper, c.upper);
  }
  return out;
}

ContourSpec choose_contour(const std::vector<Strip>& constraints, const QuadConfig& cfg) {
  Strip s = intersect(constraints);
  if (!(s.upper - s.lower >= 0.2)) {
    std::string d = "strip (" + std::to_string(s.lower) + ", " + std::to_string(s.upper) + ")";
    for (const auto& c : constraints)
      if (!c.description.empty() && (c.lower == s.lower || c.upper == s.upper)) d += " [" + c.description + "]";
    throw Error(ErrorCode::InfeasibleStrip, d);
  }
  ContourSpec spec;
  if (std::isinf(s.lower) && std::isinf(s.upper))
    spec.re_part = 0.0;
  else if (std::isinf(s.upper))
    spec.re_part = s.lower + 1.0;
  else if (std::isinf(s.lower))
    spec.re_part = s.upper - 1.0;
  else
    spec.re_part = 0.5 * (s.lower + s.upper);
  spec.height = cfg.height;
  spec.step = cfg.step;
  spec.max_refinements = cfg.max_refinements;
  spec.tail_cut = cfg.tail_cut;
  spec.min_height = cfg.min_height;
  return spec;
}

namespace {

constexpr double kInvFourPi = 1.0 / (4.0 * std::numbers::pi);

struct Grid {
  const Integrand1& f;
  const ContourSpec& spec;
  double h;
  long kl = 0, kr = 0;  // inclusive index range, t = k h
  std::deque<cplx> vals;
  double peak = 0.0;

  cplx eval(long k) {
    cplx z(spec.re_part, double(k) * h);
    cplx v;
    try {
      v = f(z);
    } catch (const Error& e) {
      throw Error(ErrorCode::NaNEncountered, std::string("integrand failed at ") + format_complex(z) + ": " + e.what());
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorCode::NaNEncountered, "integrand not finite at " + format_complex(z));
    peak = std::max(peak, std::abs(v));
    return v;
  }

  bool tail_small(bool right) const {
    if (vals.size() < 4) return false;
    double thr = spec.tail_cut * peak;
    for (int j = 0; j < 4; ++j) {
      const cplx& v = right ? vals[vals.size() - 1 - j] : vals[j];
      if (std::abs(v) > thr) return false;
    }
    return true;
  }

  void extend(double H) {
    while (double(kr + 1) * h <= H + 1e-12) {
      if (double(kr) * h >= spec.min_height && tail_small(true)) break;
      vals.push_back(eval(++kr));
    }
    while (double(kl - 1) * h >= -H - 1e-12) {
      if (-double(kl) * h >= spec.min_height && tail_small(false)) break;
      vals.push_front(eval(--kl));
    }
  }

  void refine() {
    std::deque<cplx> nv;
    for (long k = kl; k <= kr; ++k) {
      nv.push_back(vals[k - kl]);
      if (k < kr) nv.push_back(cplx());
    }
    h *= 0.5;
    kl *= 2;
    kr *= 2;
    vals.swap(nv);
    for (long k = kl + 1; k < kr; k += 2) vals[k - kl] = eval(k);
  }

  void sums(cplx& s, double& l1) const {
    s = 0.0;
    l1 = 0.0;
    for (const auto& v : vals) {
      s += v;
      l1 += std::abs(v);
    }
    s *= h * kInvFourPi;
    l1 *= h * kInvFourPi;
  }
};

}  // namespace

KernelValue integrate_vertical(const Integrand1& f, const ContourSpec& spec, double tol) {
  if (!(spec.step > 0) || !(spec.height >= spec.step))
    throw Error(ErrorCode::DomainViolation, "contour spec needs 0 < step <= height");
  Grid g{f, spec, spec.step, 0, 0, {}, 0.0};
  g.vals.push_back(g.eval(0));
  double H = spec.height;
  g.extend(H);
  cplx prev;
  double l1;
  g.sums(prev, l1);
  if (l1 == 0.0) return {0.0, 0.0};
  double err = 0.0;
  for (int r = 1; r <= spec.max_refinements; ++r) {
    g.refine();
    H *= 2.0;
    g.extend(H);
    cplx cur;
    g.sums(cur, l1);
    err = std::abs(cur - prev);
    if (err <= tol * std::abs(cur) || err <= 1e-15 * l1) return {cur, err};
    prev = cur;
  }
  throw Error(ErrorCode::NoConvergence, "trapezoid refinement budget exhausted at Re z = " +
                                            std::to_string(spec.re_part) + ", last difference " + std::to_string(err));
}

namespace {

KernelValue multi_rec(const IntegrandN& f, const std::vector<ContourSpec>& specs, double tol, std::vector<cplx>& z,
                      size_t axis, double& err_acc) {
  if (axis == 0) {
    Integrand1 g = [&](cplx w) {
      z[0] = w;
      return f(z);
    };
    KernelValue kv = integrate_vertical(g, specs[0], tol);
    err_acc = std::max(err_acc, kv.err_est);
    return kv;
  }
  double inner_err = 0.0;
  Integrand1 g = [&](cplx w) {
    z[axis] = w;
    return multi_rec(f, specs, tol, z, axis - 1, inner_err).value;
  };
  KernelValue kv = integrate_vertical(g, specs[axis], tol);
  err_acc = std::max(err_acc, kv.err_est);
  return kv;
}

}  // namespace

KernelValue integrate_vertical_multi(const IntegrandN& f, const std::vector<ContourSpec>& specs, double tol) {
  if (specs.empty() || specs.size() > 3)
    throw Error(ErrorCode::DomainViolation, "integrate_vertical_multi supports 1 to 3 contours");
  std::vector<cplx> z(specs.size());
  double err = 0.0;
  KernelValue kv = multi_rec(f, specs, tol, z, specs.size() - 1, err);
  (void)err;
  return kv;
}

}  // namespace gl4
