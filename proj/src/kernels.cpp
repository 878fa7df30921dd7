#include "gl4/kernels.hpp"

#include "gl4/lfactors.hpp"

#include <cmath>
#include <numbers>

namespace gl4 {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Gamma factors in the contour variable q.
LinFactor Rm(cplx b, int e = 1) { return gRq(-1.0, b, e); }  // Gamma_R(b - q)
LinFactor Cm(cplx b, int e = 1) { return gCq(-1.0, b, e); }
LinFactor Rp(cplx b, int e = 1) { return gRq(1.0, b, e); }   // Gamma_R(b + q)
LinFactor Cp(cplx b, int e = 1) { return gCq(1.0, b, e); }

enum Slot { L1, L2, L3, L4, L12, L13, L14, L23, L24, L34 };

MBTerm single(cplx coef, std::vector<LinFactor> outer, std::vector<LinFactor> inner) {
  MBTerm t;
  t.coef = coef;
  t.outer = std::move(outer);
  t.inner = std::move(inner);
  t.nvars = 1;
  return t;
}

std::vector<MBTerm> terms_1ii(const std::vector<cplx>& v, const GenIndex& l, const S3& s) {
  // delta = (1,0,0,0)
  const cplx &n1 = v[0], &n2 = v[1], &n3 = v[2], &n4 = v[3];
  cplx S = n1 + n2 + n3 + n4;
  int l1 = l[L1], l2 = l[L2], l3 = l[L3], l4 = l[L4];
  return {single(1.0,
                 {gR(s[0] + n1 + double(l2 + l3 + l4)), gR(s[0] + n2 + double(l1)),
                  gR(s[1] + n1 + n2 + double(l3 + l4)), gR(s[1] + n3 + n4 + double(l1 + l2)),
                  gR(s[2] + n1 + n3 + n4 + double(l4)), gR(s[2] + n2 + n3 + n4 + double(l1 + l2 + l3))},
                 {Rm(s[0] + double(l1)), Rm(s[1] + n1 + double(l3 + l4)), Rm(s[1] + n2 + double(l1 + l2)),
                  Rm(s[2] + n1 + n2 + double(l4)), Rp(n3), Rp(n4),
                  Rm(s[0] + s[1] + n1 + n2 + double(l1 + l3 + l4), -1),
                  Rm(s[1] + s[2] + S + double(l1 + l2 + l4), -1)})};
}

std::vector<MBTerm> terms_1iv(const std::vector<cplx>& v, const GenIndex& l, const S3& s) {
  // delta = (1,1,1,0)
  const cplx &n1 = v[0], &n2 = v[1], &n3 = v[2], &n4 = v[3];
  cplx S = n1 + n2 + n3 + n4;
  int l1 = l[L1], l2 = l[L2], l3 = l[L3], l4 = l[L4];
  return {single(1.0,
                 {gR(s[0] + n4 + double(l2 + l3 + l4)), gR(s[0] + n2 + double(l1)),
                  gR(s[1] + n2 + n4 + double(l3 + l4)), gR(s[1] + n1 + n3 + double(l1 + l2)),
                  gR(s[2] + n1 + n3 + n4 + double(l4)), gR(s[2] + n1 + n2 + n3 + double(l1 + l2 + l3))},
                 {Rm(s[0] + double(l1)), Rm(s[1] + n4 + double(l3 + l4)), Rm(s[1] + n2 + double(l1 + l2)),
                  Rm(s[2] + n2 + n4 + double(l4)), Rp(n1), Rp(n3),
                  Rm(s[0] + s[1] + n2 + n4 + double(l1 + l3 + l4), -1),
                  Rm(s[1] + s[2] + S + double(l1 + l2 + l4), -1)})};
}

std::vector<MBTerm> terms_1iii(const std::vector<cplx>& v, const GenIndex& l, const S3& s) {
  // delta = (1,1,0,0), l a single e_ij
  const cplx &n1 = v[0], &n2 = v[1], &n3 = v[2], &n4 = v[3];
  cplx S = n1 + n2 + n3 + n4;
  if (l[L14] + l[L24] + l[L34] == 0) {
    double a12 = l[L12], a13 = l[L13], a23 = l[L23];
    return {single(1.0,
                   {gR(s[0] + n1 + a23), gR(s[0] + n2 + a23), gR(s[1] + n1 + n2 + a13 + a23),
                    gR(s[1] + n3 + n4 + a12 + 1.0), gR(s[2] + n1 + n3 + n4 + 1.0), gR(s[2] + n2 + n3 + n4 + 1.0)},
                   {Rm(s[0] + a12 + a13), Rm(s[1] + n1 + a12), Rm(s[1] + n2 + a12), Rm(s[2] + n1 + n2), Rp(n3),
                    Rp(n4), Rm(s[0] + s[1] + n1 + n2 + a12 + a23, -1), Rm(s[1] + s[2] + S + a12 + 1.0, -1)})};
  }
  double a14 = l[L14], a24 = l[L24], a34 = l[L34];
  return {single(1.0,
                 {gR(s[0] + n3 + a14), gR(s[0] + n4 + a14), gR(s[1] + n3 + n4 + a14 + a24),
                  gR(s[1] + n1 + n2 + a34 + 1.0), gR(s[2] + n1 + n2 + n3 + 1.0), gR(s[2] + n1 + n2 + n4 + 1.0)},
                 {Rm(s[0] + a24 + a34), Rm(s[1] + n3 + a34), Rm(s[1] + n4 + a34), Rm(s[2] + n3 + n4), Rp(n1),
                  Rp(n2), Rm(s[0] + s[1] + n3 + n4 + a14 + a34, -1), Rm(s[1] + s[2] + S + a34 + 1.0, -1)})};
}

std::vector<MBTerm> terms_2i(const InducingDatum& sg, const GenIndex& l, const S3& s) {
  const cplx &n1 = sg.nu[0], &n2 = sg.nu[1], &n3 = sg.nu[2];
  cplx c = 0.5 * (sg.k1 - 1);
  int l1 = l[L1], l2 = l[L2], l3 = l[L3], l4 = l[L4];
  return {single(1.0,
                 {gC(s[0] + n1 + c), gR(s[1] + 2.0 * n1 + double(l3 + l4)), gR(s[1] + n2 + n3 + double(l1 + l2)),
                  gC(s[2] + n1 + n2 + n3 + c)},
                 {Rm(s[0] + double(l1)), Cm(s[1] + n1 + c), Rm(s[2] + 2.0 * n1 + double(l4)), Rp(n2), Rp(n3),
                  Rm(s[0] + s[1] + 2.0 * n1 + double(l1 + l3 + l4), -1),
                  Rm(s[1] + s[2] + 2.0 * n1 + n2 + n3 + double(l1 + l2 + l4), -1)})};
}

std::vector<MBTerm> terms_2ii(const InducingDatum& sg, const GenIndex& l, const S3& s) {
  const cplx &n1 = sg.nu[0], &n2 = sg.nu[1], &n3 = sg.nu[2];
  cplx c = 0.5 * (sg.k1 - 1);
  const int l1 = l[L1], l2 = l[L2], l3 = l[L3], l4 = l[L4];
  const int l12 = l[L12], l13 = l[L13], l14 = l[L14], l23 = l[L23], l24 = l[L24], l34 = l[L34];
  cplx pre = std::pow(kTwoPi, -double(l13 + l24)) * pochhammer(s[1] + n1 + n2 + c - double(l13 + l24), l13) *
             pochhammer(s[1] + n1 + n3 + c - double(l24), l24);
  std::vector<LinFactor> outer = {gC(s[0] + n1 + c), gR(s[1] + 2.0 * n1 + double(l3 + l4 + l12 + l34)),
                                  gR(s[1] + n2 + n3 + double(l1 + l2 + l12 + l34)), gC(s[2] + n1 + n2 + n3 + c)};
  std::vector<MBTerm> out;
  for (int i14 = 0; i14 <= l14; ++i14)
    for (int i23 = 0; i23 <= l23; ++i23) {
      int a = i14 + i23;
      out.push_back(single(
          pre, outer,
          {Rm(s[0] + double(l1 + a)), Cm(s[1] + n1 + c - double(l13 + l24)),
           Rm(s[2] + 2.0 * n1 + double(l4 + l14 + l23 - a)), Rp(n2 + double(l23 + l24 + l34 + i14 - i23)),
           Rp(n3 + double(l12 + l13 + l14 - i14 + i23)),
           Rm(s[0] + s[1] + 2.0 * n1 + double(l1 + l3 + l4 + l12 + l34 + a), -1),
           Rm(s[1] + s[2] + 2.0 * n1 + n2 + n3 + double(l1 + l2 + l4 + l12 + l14 + l23 + l34 - a), -1)}));
    }
  return out;
}

std::vector<MBTerm> terms_3(const InducingDatum& sg, const GenIndex& l, const S3& s) {
  const cplx &n1 = sg.nu[0], &n2 = sg.nu[1];
  cplx c = 0.5 * (sg.k1 - 1), c2 = 0.5 * (sg.k2 - 1);
  const int l1 = l[L1], l2 = l[L2], l3 = l[L3], l4 = l[L4];
  const int l12 = l[L12], l13 = l[L13], l14 = l[L14], l23 = l[L23], l24 = l[L24], l34 = l[L34];
  cplx pre = std::pow(kTwoPi, -double(l13 + l24)) *
             pochhammer(s[1] + n1 + n2 + 0.5 * (sg.k1 + sg.k2) - double(l13 + l24) - 1.0, l13 + l24);
  std::vector<LinFactor> outer = {gC(s[0] + n1 + c), gR(s[1] + 2.0 * n1 + double(l3 + l4 + l12 + l34)),
                                  gR(s[1] + 2.0 * n2 + double(l1 + l2 + l12 + l34)), gC(s[2] + n1 + 2.0 * n2 + c)};
  std::vector<MBTerm> out;
  const int n = l14 + l23;
  for (int i = 0; i <= n; ++i)
    out.push_back(single(pre * binomial(n, i), outer,
                         {Rm(s[0] + double(l1 + i)), Cm(s[1] + n1 + c - double(l13 + l24)),
                          Rm(s[2] + 2.0 * n1 + double(l4 + n - i)), Cp(n2 + c2),
                          Rm(s[0] + s[1] + 2.0 * n1 + double(l1 + l3 + l4 + l12 + l34 + i), -1),
                          Rm(s[1] + s[2] + 2.0 * n1 + 2.0 * n2 + double(l1 + l2 + l4 + l12 + n + l34 - i), -1)}));
  return out;
}

}  // namespace

KernelId make_kernel_id(const InducingDatum& sigma, const GenIndex& l) {
  if (!in_S(sigma.lambda, l))
    throw Error(ErrorCode::InvalidIndex, index_str(l) + " is not in S_" + weight_str(sigma.lambda));
  return {sigma, l};
}

MBTerm kernel_U_term(int m, const S3& s, const Mu4& mu) {
  const cplx &m1 = mu[0], &m2 = mu[1], &m3 = mu[2], &m4 = mu[3];
  cplx S = m1 + m2 + m3 + m4;
  double dm = m;
  return single(1.0,
                {gR(s[0] + m1), gR(s[0] + m2), gR(s[1] + m1 + m2 - dm), gR(s[1] + m3 + m4 + dm),
                 gR(s[2] + m1 + m3 + m4), gR(s[2] + m2 + m3 + m4)},
                {Rm(s[0] + dm), Rm(s[1] + m1), Rm(s[1] + m2), Rm(s[2] + m1 + m2 - dm), Rp(m3), Rp(m4),
                 Rm(s[0] + s[1] + m1 + m2, -1), Rm(s[1] + s[2] + S, -1)});
}

KernelValue kernel_U(int m, const S3& s, const Mu4& mu, double tol) { return eval_mb(kernel_U_term(m, s, mu), tol); }

cplx U0_diagonal(cplx s1, cplx s2, const Mu4& mu) {
  cplx lg = 0.0, S = 0.0;
  for (int i = 0; i < 4; ++i) {
    lg += log_gamma_R(s1 + mu[i]);
    S += mu[i];
    for (int j = i + 1; j < 4; ++j) lg += log_gamma_R(s2 + mu[i] + mu[j]);
  }
  return std::exp(lg - log_gamma_R(2.0 * s2 + S));
}

KernelValue kernel_V_double(const S3& s, cplx a1, cplx a2, const Poly& P, const Mu4& mu, double tol) {
  if (P.is_zero()) return {0.0, 0.0};
  const cplx &m1 = mu[0], &m2 = mu[1], &m3 = mu[2], &m4 = mu[3];
  const QuadConfig& cfg = default_quad_config();
  if (tol <= 0) tol = cfg.tol2;
  auto strip = [](double lo, double hi, const char* what) {
    Strip st;
    st.lower = lo;
    st.upper = hi;
    st.description = what;
    return st;
  };
  double lo1 = std::max({-m2.real(), -m3.real(), -m4.real()});
  double hi1 = std::min((s[0] + a1).real(), (s[1] + m1 + a1).real());
  double lo2 = std::max({-(m3 + m4).real(), -(m2 + m4).real(), -(m2 + m3).real()});
  double hi2 = std::min((s[1] + a2).real(), (s[2] + m1 + a2).real());
  std::vector<ContourSpec> specs = {choose_contour({strip(lo1, hi1, "t1")}, cfg),
                                    choose_contour({strip(lo2, hi2, "t2")}, cfg)};
  Poly Ps = P.partial({{"s1", s[0]}, {"s2", s[1]}, {"s3", s[2]}});
  cplx lo = log_gamma_R(s[0] + m1) + log_gamma_R(s[2] + m2 + m3 + m4);
  auto f = [&](const std::vector<cplx>& t) -> cplx {
    const cplx &t1 = t[0], &t2 = t[1];
    cplx l = lo + log_gamma_R(s[0] - t1 + a1) + log_gamma_R(s[1] - t1 + m1 + a1) + log_gamma_R(s[1] - t2 + a2) +
             log_gamma_R(s[2] - t2 + m1 + a2) + log_gamma_R(t1 + m2) + log_gamma_R(t1 + m3) +
             log_gamma_R(t1 + m4) + log_gamma_R(t2 + m3 + m4) + log_gamma_R(t2 + m2 + m4) +
             log_gamma_R(t2 + m2 + m3);
    cplx d = t1 + t2 + m2 + m3 + m4;
    if (near_nonpositive_integer(0.5 * d)) return 0.0;
    l -= log_gamma_R(d);
    return Ps.eval({{"t1", t1}, {"t2", t2}}) * std::exp(l);
  };
  return integrate_vertical_multi(f, specs, tol);
}

std::vector<MBTerm> kernel_terms(const KernelId& id, const S3& s) {
  const InducingDatum& sg = id.sigma;
  if (!in_S(sg.lambda, id.l))
    throw Error(ErrorCode::InvalidIndex, index_str(id.l) + " is not in S_" + weight_str(sg.lambda));
  switch (sg.family) {
    case Family::P1111:
      switch (sg.subcase) {
        case 1:
          return {kernel_U_term(0, s, {sg.nu[0], sg.nu[1], sg.nu[2], sg.nu[3]})};
        case 2:
          return terms_1ii(sg.nu, id.l, s);
        case 3:
          return terms_1iii(sg.nu, id.l, s);
        case 4:
          return terms_1iv(sg.nu, id.l, s);
      }
      break;
    case Family::P211:
      return sg.subcase == 1 ? terms_2i(sg, id.l, s) : terms_2ii(sg, id.l, s);
    case Family::P22:
      return terms_3(sg, id.l, s);
  }
  throw Error(ErrorCode::UnsupportedCase, sg.str());
}

KernelValue kernel_sigma_l(const KernelId& id, const S3& s, double tol) {
  return eval_mb_sum(kernel_terms(id, s), tol);
}

KernelValue kernel_hat(const KernelId& id, const S3& s, double tol) {
  return kernel_sigma_l(id, {s[0], s[1], s[2] + double(id.sigma.k2)}, tol);
}

GenIndex ds_reduced_index(const GenIndex& l) {
  return {l[L1] + l[L2], 0, 0, l[L3] + l[L4], l[L12] + l[L13], 0, l[L14], l[L23], 0, l[L24] + l[L34]};
}

S3 ds_reduced_point(const GenIndex& l, const S3& s) {
  return {s[0] - double(l[L2]), s[1] - double(l[L13] + l[L24]), s[2] - double(l[L3])};
}

cplx ds_shift_factor(const InducingDatum& sg, const GenIndex& l, const S3& s) {
  const int l2 = l[L2], l3 = l[L3], l13 = l[L13], l24 = l[L24];
  double h1 = 0.5 * (sg.k1 - 1), h12 = 0.5 * (sg.k1 + sg.k2) - 1.0;
  cplx n12 = sg.nu[0] + sg.nu[1];
  cplx g1 = sg.gamma[0];
  return std::pow(kTwoPi, -double(l2 + l3 + l13 + l24)) * pochhammer(s[0] + sg.nu1p + h1 - double(l2), l2) *
         pochhammer(s[2] + g1 - sg.nu1p + h1 + double(sg.k2) - double(l3), l3) *
         pochhammer(s[1] + n12 + h12 - double(l13 + l24), l13) *
         pochhammer(s[1] + g1 - n12 + h12 - double(l24), l24);
}

KernelValue ds_shift_rhs(const KernelId& id, const S3& s, double tol) {
  KernelId r{id.sigma, ds_reduced_index(id.l)};
  return ds_shift_factor(id.sigma, id.l, s) * kernel_hat(r, ds_reduced_point(id.l, s), tol);
}

GenIndex reverse_index(const GenIndex& l) {
  return {l[L4], l[L3], l[L2], l[L1], l[L34], l[L24], l[L14], l[L23], l[L13], l[L12]};
}

KernelValue kernel_contragredient_direct(const KernelId& id, const S3& s, double tol) {
  return kernel_sigma_l({contragredient(id.sigma), id.l}, s, tol);
}

KernelValue kernel_contragredient_reversal(const KernelId& id, const S3& s, double tol) {
  cplx g1 = id.sigma.gamma[0];
  return kernel_sigma_l({id.sigma, reverse_index(id.l)}, {s[2] - g1, s[1] - g1, s[0] - g1}, tol);
}

cplx radial_sign(const GenIndex& l) {
  int e = -l[L1] + l[L3] - l[L13] + l[L24];
  int m = l[L2] + l[L14] + l[L23];
  return i_power(e) * (m % 2 ? -1.0 : 1.0);
}

cplx contragredient_radial_sign(const InducingDatum& sg, const GenIndex& l) {
  int e = l[L2] - l[L4] + l[L13] - l[L24];
  int m = sg.k2 + l[L3] + l[L14] + l[L23];
  return i_power(e) * (m % 2 ? -1.0 : 1.0);
}

GenIndex special_value_index(const InducingDatum& sg) {
  return (sg.k1 - sg.k2) * unit(4) + sg.k2 * unit(3, 4);
}

Mu4 special_value_r(const InducingDatum& sg) {
  const auto& v = sg.nu;
  double k1 = sg.k1, k2 = sg.k2;
  switch (sg.family) {
    case Family::P1111:
      if (sg.subcase == 4) return {v[3] + 1.0, v[1], v[2], v[0]};
      return {v[0] + k1, v[1] + k2, v[2], v[3]};
    case Family::P211:
      return {v[0] + 0.5 * (k1 - 1), v[0] + 0.5 * (k1 + 1), v[1] + k2, v[2]};
    case Family::P22:
      return {v[0] + 0.5 * (k1 - 1), v[0] + 0.5 * (k1 + 1), v[1] + 0.5 * (k2 - 1), v[1] + 0.5 * (k2 + 1)};
  }
  return {};
}

cplx special_value_closed(const InducingDatum& sg, cplx s1, cplx s2) {
  return U0_diagonal(s1, s2, special_value_r(sg));
}

WhittakerGrid::WhittakerGrid(const KernelId& id, const WhittakerGridSpec& spec) : id_(id), spec_(spec) {
  if (!in_S(id.sigma.lambda, id.l))
    throw Error(ErrorCode::InvalidIndex, index_str(id.l) + " is not in S_" + weight_str(id.sigma.lambda));
  int n = int(std::lround(spec.height / spec.step));
  for (int k = -n; k <= n; ++k) ts_.push_back(k * spec.step);
  const size_t N = ts_.size();
  v_.assign(N * N * N, 0.0);
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b)
      for (size_t c = 0; c < N; ++c) {
        S3 s = {spec.re_parts[0] + cplx(0, ts_[a]), spec.re_parts[1] + cplx(0, ts_[b]),
                spec.re_parts[2] + cplx(0, ts_[c])};
        KernelValue kv = kernel_sigma_l(id_, s, spec.kernel_tol);
        v_[(a * N + b) * N + c] = kv.value;
        max_err_ = std::max(max_err_, kv.err_est);
      }
}

std::vector<cplx> WhittakerGrid::values_on_grid(const std::vector<double>& xs) const {
  // W(e^{-x}) = sign * e^{-(3/2 x1 + 2 x2 + 3/2 x3)} (4 pi)^{-3} h^3 sum_k V(c + i t_k) e^{(c + i t_k) x}
  const size_t N = ts_.size(), M = xs.size();
  const double h = spec_.step;
  auto e = [&](int axis, size_t ix, size_t k) {
    return std::exp((spec_.re_parts[axis] + cplx(0, ts_[k])) * xs[ix]);
  };
  // contract third axis, then second, then first
  std::vector<cplx> A(N * N * M, 0.0), B(N * M * M, 0.0), C(M * M * M, 0.0);
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b)
      for (size_t x3 = 0; x3 < M; ++x3) {
        cplx acc = 0.0;
        for (size_t c = 0; c < N; ++c) acc += v_[(a * N + b) * N + c] * e(2, x3, c);
        A[(a * N + b) * M + x3] = acc;
      }
  for (size_t a = 0; a < N; ++a)
    for (size_t x2 = 0; x2 < M; ++x2)
      for (size_t x3 = 0; x3 < M; ++x3) {
        cplx acc = 0.0;
        for (size_t b = 0; b < N; ++b) acc += A[(a * N + b) * M + x3] * e(1, x2, b);
        B[(a * M + x2) * M + x3] = acc;
      }
  const cplx sign = radial_sign(id_.l);
  const double norm = std::pow(h / (4.0 * std::numbers::pi), 3);
  for (size_t x1 = 0; x1 < M; ++x1)
    for (size_t x2 = 0; x2 < M; ++x2)
      for (size_t x3 = 0; x3 < M; ++x3) {
        cplx acc = 0.0;
        for (size_t a = 0; a < N; ++a) acc += B[(a * M + x2) * M + x3] * e(0, x1, a);
        double pref = std::exp(-(1.5 * xs[x1] + 2.0 * xs[x2] + 1.5 * xs[x3]));
        C[(x1 * M + x2) * M + x3] = sign * pref * norm * acc;
      }
  return C;
}

KernelValue WhittakerGrid::value(const RadialPoint& y) const {
  if (!(y.y1 > 0 && y.y2 > 0 && y.y3 > 0 && y.y4 > 0))
    throw Error(ErrorCode::DomainViolation, "radial coordinates must be positive");
  const size_t N = ts_.size();
  const double h = spec_.step;
  const double x[3] = {-std::log(y.y1), -std::log(y.y2), -std::log(y.y3)};
  cplx acc = 0.0;
  for (size_t a = 0; a < N; ++a) {
    cplx ea = std::exp((spec_.re_parts[0] + cplx(0, ts_[a])) * x[0]);
    for (size_t b = 0; b < N; ++b) {
      cplx eb = ea * std::exp((spec_.re_parts[1] + cplx(0, ts_[b])) * x[1]);
      for (size_t c = 0; c < N; ++c)
        acc += v_[(a * N + b) * N + c] * eb * std::exp((spec_.re_parts[2] + cplx(0, ts_[c])) * x[2]);
    }
  }
  cplx pref = std::pow(y.y1, 1.5) * y.y2 * y.y2 * std::pow(y.y3, 1.5) * std::pow(cplx(y.y4), id_.sigma.gamma[0]);
  double norm = std::pow(h / (4.0 * std::numbers::pi), 3);
  cplx w = radial_sign(id_.l) * pref * norm * acc;
  return {w, std::abs(w) * max_err_ + norm * max_err_};
}

cplx WhittakerGrid::mellin_transform(const std::vector<double>& xs, const S3& s) const {
  // \int W(y) y1^{s1-3/2} y2^{s2-2} y3^{s3-3/2} dy/y over y = e^{-x}, divided by the sign.
  std::vector<cplx> W = values_on_grid(xs);
  const size_t M = xs.size();
  std::vector<double> w(M, 0.0);
  for (size_t k = 0; k + 1 < M; ++k) {
    w[k] += 0.5 * (xs[k + 1] - xs[k]);
    w[k + 1] += 0.5 * (xs[k + 1] - xs[k]);
  }
  cplx acc = 0.0;
  for (size_t a = 0; a < M; ++a)
    for (size_t b = 0; b < M; ++b)
      for (size_t c = 0; c < M; ++c) {
        cplx ex = std::exp(-((s[0] - 1.5) * xs[a] + (s[1] - 2.0) * xs[b] + (s[2] - 1.5) * xs[c]));
        acc += w[a] * w[b] * w[c] * W[(a * M + b) * M + c] * ex;
      }
  return acc / radial_sign(id_.l);
}

KernelValue whittaker_value(const KernelId& id, const RadialPoint& y, const WhittakerGridSpec& spec) {
  return WhittakerGrid(id, spec).value(y);
}

}  // namespace gl4
