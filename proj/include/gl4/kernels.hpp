#pragma once

#include <array>
#include <map>
#include <vector>

#include "gl4/mb.hpp"
#include "gl4/poly.hpp"
#include "gl4/rep.hpp"
#include "gl4/sigma.hpp"

namespace gl4 {

using S3 = std::array<cplx, 3>;
using Mu4 = std::array<cplx, 4>;

struct KernelId {
  InducingDatum sigma;
  GenIndex l{};
};

// Throws InvalidIndex unless l lies in S_lambda for lambda = minimal_k_type(sigma).
KernelId make_kernel_id(const InducingDatum& sigma, const GenIndex& l);

struct RadialPoint {
  double y1 = 1.0, y2 = 1.0, y3 = 1.0, y4 = 1.0;
};

// U_m(s; mu) as a single-contour term, and its value.
MBTerm kernel_U_term(int m, const S3& s, const Mu4& mu);
KernelValue kernel_U(int m, const S3& s, const Mu4& mu, double tol = -1.0);

// Closed form of U_0 on s3 = s1 + s2.
cplx U0_diagonal(cplx s1, cplx s2, const Mu4& mu);

// V(s; a1, a2; P) with P a polynomial in s1, s2, s3, t1, t2. Double contour.
KernelValue kernel_V_double(const S3& s, cplx a1, cplx a2, const Poly& P, const Mu4& mu, double tol = -1.0);

// Terms of V_{sigma,l}(s) as displayed for the case of sigma (sum of single-contour terms).
std::vector<MBTerm> kernel_terms(const KernelId& id, const S3& s);
KernelValue kernel_sigma_l(const KernelId& id, const S3& s, double tol = -1.0);

// Kernel of the function attached to y3^{3/2 - kappa_2}: V(s1, s2, s3 + kappa_2).
KernelValue kernel_hat(const KernelId& id, const S3& s, double tol = -1.0);

// Index without l2, l3, l13 and l24 reached by the Dirac-Schmid shift, and the shift data.
GenIndex ds_reduced_index(const GenIndex& l);
S3 ds_reduced_point(const GenIndex& l, const S3& s);
// Pochhammer and (2 pi) prefactor of the shift relation for the hatted kernel.
cplx ds_shift_factor(const InducingDatum& sigma, const GenIndex& l, const S3& s);
// Right-hand side of the shift relation: factor * kernel_hat at the reduced index and point.
KernelValue ds_shift_rhs(const KernelId& id, const S3& s, double tol = -1.0);

// e_i -> e_{5-i}, e_ij -> e_{5-j,5-i}: l14 and l23 stay in place.
GenIndex reverse_index(const GenIndex& l);
// Contragredient kernel two ways: (a) nu -> -nu in the displayed formula; (b) index and s reversal.
KernelValue kernel_contragredient_direct(const KernelId& id, const S3& s, double tol = -1.0);
KernelValue kernel_contragredient_reversal(const KernelId& id, const S3& s, double tol = -1.0);

// sqrt(-1)^{-l1+l3-l13+l24} (-1)^{l2+l14+l23}
cplx radial_sign(const GenIndex& l);
// Sign for the contragredient: sqrt(-1)^{l2-l4+l13-l24} (-1)^{kappa2+l3+l14+l23}
cplx contragredient_radial_sign(const InducingDatum& sigma, const GenIndex& l);

// Index (kappa1-kappa2) e4 + kappa2 e34 and the parameters r of the special value.
GenIndex special_value_index(const InducingDatum& sigma);
Mu4 special_value_r(const InducingDatum& sigma);
cplx special_value_closed(const InducingDatum& sigma, cplx s1, cplx s2);

// Radial part of the Whittaker function by a triple trapezoid over a fixed contour grid.
// The kernel samples are computed once; values and Mellin transforms reuse them.
struct WhittakerGridSpec {
  S3 re_parts{3.0, 3.0, 4.0};
  double step = 0.5;
  double height = 8.0;
  double kernel_tol = 1e-7;
};

class WhittakerGrid {
 public:
  WhittakerGrid(const KernelId& id, const WhittakerGridSpec& spec = {});
  // y4 enters only through y4^{gamma_1}.
  KernelValue value(const RadialPoint& y) const;
  // Values on the product grid y_i = exp(-x_i), x_i in xs.
  std::vector<cplx> values_on_grid(const std::vector<double>& xs) const;
  // Trapezoid Mellin transform of the radial part over x in xs^3, divided by the radial sign.
  // With the (4 pi i)^{-3} inversion this approximates V_{sigma,l}(s) / 8.
  cplx mellin_transform(const std::vector<double>& xs, const S3& s) const;
  size_t samples() const { return ts_.size() * ts_.size() * ts_.size(); }

 private:
  KernelId id_;
  WhittakerGridSpec spec_;
  std::vector<double> ts_;
  std::vector<cplx> v_;  // V(c + i t), index ((k1 * n) + k2) * n + k3
  double max_err_ = 0.0;
};

KernelValue whittaker_value(const KernelId& id, const RadialPoint& y, const WhittakerGridSpec& spec = {});

}  // namespace gl4
