#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "gl4/error.hpp"

namespace gl4 {

// Admissible range lower < Re(z) < upper for one contour variable.
struct Strip {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  std::string description;
};

struct QuadConfig {
  double step = 0.25;
  double height = 40.0;
  int max_refinements = 6;
  double tol1 = 1e-8;
  double tol2 = 1e-6;
  double tol3 = 1e-4;
  // Points with |f| below tail_cut * max|f| stop the outward sweep once past min_height.
  double tail_cut = 1e-20;
  double min_height = 10.0;
  double tol_for_dim(int dim) const { return dim <= 1 ? tol1 : dim == 2 ? tol2 : tol3; }
};

// Process-wide defaults; the CLI overrides them from its config.
QuadConfig& default_quad_config();

struct ContourSpec {
  double re_part = 0.0;
  double height = 40.0;
  double step = 0.25;
  int max_refinements = 6;
  double tail_cut = 1e-20;
  double min_height = 10.0;
};

struct KernelValue {
  cplx value = 0.0;
  double err_est = 0.0;
};

inline KernelValue operator+(KernelValue a, KernelValue b) { return {a.value + b.value, a.err_est + b.err_est}; }
inline KernelValue operator*(cplx c, KernelValue a) { return {c * a.value, std::abs(c) * a.err_est}; }

Strip intersect(const std::vector<Strip>& constraints);

// Midpoint of the intersected strip; a half-infinite strip gets re_part = finite end +/- 1.
ContourSpec choose_contour(const std::vector<Strip>& constraints, const QuadConfig& cfg = default_quad_config());

using Integrand1 = std::function<cplx(cplx)>;
using IntegrandN = std::function<cplx(const std::vector<cplx>&)>;

// (4 pi i)^{-1} \int_{Re z = re_part} f(z) dz by refined trapezoid sums.
KernelValue integrate_vertical(const Integrand1& f, const ContourSpec& spec, double tol);

// Iterated version over up to three vertical lines, normalization (4 pi i)^{-dim}.
KernelValue integrate_vertical_multi(const IntegrandN& f, const std::vector<ContourSpec>& specs, double tol);

}  // namespace gl4
