#include "gl4/pde.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace gl4 {

DiffOp::DiffOp(cplx c) {
  if (c != cplx(0.0)) terms_[{0, 0, 0}] = Poly(c);
}

DiffOp::DiffOp(double c) : DiffOp(cplx(c)) {}

DiffOp DiffOp::d(int i) {
  DiffOp r;
  r.terms_[{0, 0, 0}] = -Poly::var("s" + std::to_string(i));
  return r;
}

DiffOp DiffOp::y(int i) {
  DiffOp r;
  Shift3 sh{0, 0, 0};
  sh[i - 1] = 1;
  r.terms_[sh] = Poly(1.0);
  return r;
}

void DiffOp::add(const Shift3& sh, const Poly& p) {
  Poly& t = terms_[sh];
  t = t + p;
  if (t.is_zero()) terms_.erase(sh);
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  DiffOp r = a;
  for (const auto& [sh, p] : b.terms_) r.add(sh, p);
  return r;
}

DiffOp DiffOp::operator-() const {
  DiffOp r;
  for (const auto& [sh, p] : terms_) r.terms_[sh] = -p;
  return r;
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }

DiffOp operator*(const DiffOp& A, const DiffOp& B) {
  // P(s) f(s + a) composed with Q(s) f(s + b): P(s) Q(s + a) f(s + a + b)
  DiffOp r;
  for (const auto& [a, P] : A.terms_)
    for (const auto& [b, Q] : B.terms_) {
      Poly Qa = Q.shifted({{"s1", a[0]}, {"s2", a[1]}, {"s3", a[2]}});
      r.add({a[0] + b[0], a[1] + b[1], a[2] + b[2]}, P * Qa);
    }
  return r;
}

void MellinOperator::add(const DiffOp& op, const Combo& target) {
  if (target.empty()) return;
  for (const auto& [sh, p] : op.terms()) terms.push_back({p, sh, target});
}

cplx KernelCache::get(const GenIndex& l, const Shift3& shift) {
  auto key = std::make_pair(l, shift);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  S3 s = {s_[0] + double(shift[0]), s_[1] + double(shift[1]), s_[2] + double(shift[2])};
  KernelValue kv = kernel_hat({sigma_, l}, s, tol_);
  max_err_ = std::max(max_err_, kv.err_est / std::max(std::abs(kv.value), 1e-300));
  memo_[key] = kv.value;
  return kv.value;
}

namespace {

GenIndex u(int i) { return unit(i); }
GenIndex u(int i, int j) { return unit(i, j); }

enum Slot { L1, L2, L3, L4, L12, L13, L14, L23, L24, L34 };

struct ComboBuilder {
  const HighestWeight& w;
  const GenIndex& l;
  Combo c;
  void add(long coef, const GenIndex& delta) {
    if (coef == 0) return;
    GenIndex t = l + delta;
    if (nonnegative(t) && in_S(w, t)) add_to(c, t, mpq_class(coef));
  }
};

Combo single_target(const HighestWeight& w, const GenIndex& l) {
  Combo c;
  if (nonnegative(l) && in_S(w, l)) c[l] = 1;
  return c;
}

OperatorValue eval_op(const MellinOperator& op, const Point& pt, KernelCache& cache) {
  OperatorValue out;
  for (const auto& t : op.terms) {
    cplx pv = t.poly.eval(pt);
    if (pv == cplx(0.0)) continue;
    double tp = std::pow(2.0 * std::numbers::pi, t.shift[0] + t.shift[1] + t.shift[2]);
    for (const auto& [l, c] : t.target) {
      cplx contrib = pv * c.get_d() * tp * cache.get(l, t.shift);
      out.value += contrib;
      out.max_term = std::max(out.max_term, std::abs(contrib));
    }
  }
  out.err_est = cache.max_err();
  return out;
}

Point point_of(const S3& s) { return {{"s1", s[0]}, {"s2", s[1]}, {"s3", s[2]}}; }

// Real sign of sqrt(-1)^a / sqrt(-1)^b; the relations only ever link indices of equal parity.
int sign_ratio(cplx a, cplx b) {
  cplx r = a / b;
  if (std::abs(r.imag()) > 1e-12)
    throw Error(ErrorCode::InconsistentRelations, "relation links generators with non-real sign ratio");
  return r.real() > 0 ? 1 : -1;
}

// Targets are kernels V_l; the relations hold for radial_sign(l) V_l, so reduce in that frame.
Combo maybe_reduce(const HighestWeight& w, const Combo& c, bool reduce) {
  if (!reduce || c.empty()) return c;
  const cplx ref = radial_sign(c.begin()->first);
  Combo phi;
  for (const auto& [l, q] : c) add_to(phi, l, q * sign_ratio(ref, radial_sign(l)));
  Combo out;
  for (const auto& [m, q] : reduce_to_basis(w, phi)) add_to(out, m, q * sign_ratio(radial_sign(m), ref));
  return out;
}

}  // namespace

OperatorValue apply_mellin_operator(const MellinOperator& op, KernelCache& cache) {
  return eval_op(op, point_of(cache.point()), cache);
}

OperatorValue apply_mellin_operator(const MellinOperator& op, const InducingDatum& sigma, const S3& s) {
  KernelCache cache(sigma, s);
  return apply_mellin_operator(op, cache);
}

std::map<std::string, Combo> build_k_operators(const InducingDatum& sigma, const GenIndex& l, bool literal_k1234) {
  const HighestWeight& w = sigma.lambda;
  const long l1 = l[L1], l2 = l[L2], l3 = l[L3], l4 = l[L4];
  const long l12 = l[L12], l13 = l[L13], l14 = l[L14], l23 = l[L23], l24 = l[L24], l34 = l[L34];
  std::map<std::string, Combo> out;
  {
    ComboBuilder b{w, l, {}};
    b.add(l1, u(2) - u(1));
    b.add(l2, u(1) - u(2));
    b.add(l13, u(2, 3) - u(1, 3));
    b.add(l14, u(2, 4) - u(1, 4));
    b.add(l23, u(1, 3) - u(2, 3));
    b.add(l24, u(1, 4) - u(2, 4));
    out["K12"] = b.c;
  }
  {
    ComboBuilder b{w, l, {}};
    b.add(l2, u(3) - u(2));
    b.add(l3, u(2) - u(3));
    b.add(l12, u(1, 3) - u(1, 2));
    b.add(l13, u(1, 2) - u(1, 3));
    b.add(l24, u(3, 4) - u(2, 4));
    b.add(l34, u(2, 4) - u(3, 4));
    out["K23"] = b.c;
  }
  {
    ComboBuilder b{w, l, {}};
    b.add(l3, u(4) - u(3));
    b.add(l4, u(3) - u(4));
    b.add(l13, u(1, 4) - u(1, 3));
    b.add(l14, u(1, 3) - u(1, 4));
    b.add(l23, u(2, 4) - u(2, 3));
    b.add(l24, u(2, 3) - u(2, 4));
    out["K34"] = b.c;
  }
  {
    ComboBuilder b{w, l, {}};
    b.add(l1, u(3) - u(1));
    b.add(-l3, u(1) - u(3));
    b.add(-l12, u(2, 3) - u(1, 2));
    b.add(l14, u(3, 4) - u(1, 4));
    b.add(l23, u(1, 2) - u(2, 3));
    b.add(-l34, u(1, 4) - u(3, 4));
    out["K13"] = b.c;
  }
  {
    ComboBuilder b{w, l, {}};
    b.add(l2, u(4) - u(2));
    b.add(-l4, u(2) - u(4));
    b.add(l12, u(1, 4) - u(1, 2));
    b.add(-l14, u(1, 2) - u(1, 4));
    b.add(-l23, u(3, 4) - u(2, 3));
    b.add(l34, u(2, 3) - u(3, 4));
    out["K24"] = b.c;
  }
  {
    ComboBuilder b{w, l, {}};
    b.add(-l1, u(4) - u(1));
    b.add(-l4, u(1) - u(4));
    b.add(l12, u(2, 4) - u(1, 2));
    b.add(l13, u(3, 4) - u(1, 3));
    b.add(l24, u(1, 2) - u(2, 4));
    b.add(l34, u(1, 3) - u(3, 4));
    out["K14"] = b.c;
  }
  {
    ComboBuilder b{w, l, {}};
    b.add(l1 * l3, u(2) + u(4) - u(1) - u(3));
    b.add(l1 * l4, u(2) + u(3) - u(1) - u(4));
    b.add(l2 * l3, u(1) + u(4) - u(2) - u(3));
    b.add(l2 * l4, u(1) + u(3) - u(2) - u(4));
    b.add(l1 * l13, u(2) - u(1) + u(1, 4) - u(1, 3));
    b.add(l1 * l14, u(2) - u(1) + u(1, 3) - u(1, 4));
    b.add(l1 * l23, u(2) - u(1) + u(2, 4) - u(2, 3));
    b.add(l1 * l24, u(2) - u(1) + u(2, 3) - u(2, 4));
    b.add(l2 * l13, u(1) - u(2) + u(1, 4) - u(1, 3));
    b.add(l2 * l14, (literal_k1234 ? u(2, 3) : u(1)) - u(2) + u(1, 3) - u(1, 4));
    b.add(l2 * l23, u(1) - u(2) + u(2, 4) - u(2, 3));
    b.add(l2 * l24, u(1) - u(2) + u(2, 3) - u(2, 4));
    b.add(l3 * l13, u(4) - u(3) + u(2, 3) - u(1, 3));
    b.add(l3 * l14, u(4) - u(3) + u(2, 4) - u(1, 4));
    b.add(l3 * l23, u(4) - u(3) + u(1, 3) - u(2, 3));
    b.add(l3 * l24, u(4) - u(3) + u(1, 4) - u(2, 4));
    b.add(l4 * l13, u(3) - u(4) + u(2, 3) - u(1, 3));
    b.add(l4 * l14, u(3) - u(4) + u(2, 4) - u(1, 4));
    b.add(l4 * l23, u(3) - u(4) + u(1, 3) - u(2, 3));
    b.add(l4 * l24, u(3) - u(4) + u(1, 4) - u(2, 4));
    b.add(l13 * (l14 + l23 + 1), u(2, 4) - u(1, 3));
    b.add(l24 * (l14 + l23 + 1), u(1, 3) - u(2, 4));
    b.add(l14 * (l13 + l24 + 1), u(2, 3) - u(1, 4));
    b.add(l23 * (l13 + l24 + 1), u(1, 4) - u(2, 3));
    b.add(l13 * l24, 2 * u(1, 4) - u(1, 3) - u(2, 4));
    b.add(l13 * l24, 2 * u(2, 3) - u(1, 3) - u(2, 4));
    b.add(l14 * l23, 2 * u(1, 3) - u(1, 4) - u(2, 3));
    b.add(l14 * l23, 2 * u(2, 4) - u(1, 4) - u(2, 3));
    b.add(l13 * (l13 - 1), u(1, 4) + u(2, 3) - 2 * u(1, 3));
    b.add(l24 * (l24 - 1), u(1, 4) + u(2, 3) - 2 * u(2, 4));
    b.add(l14 * (l14 - 1), u(1, 3) + u(2, 4) - 2 * u(1, 4));
    b.add(l23 * (l23 - 1), u(1, 3) + u(2, 4) - 2 * u(2, 3));
    out["K12_34"] = b.c;
  }
  return out;
}

std::vector<MellinOperator> capelli_operators(const InducingDatum& sigma, const GenIndex& l, const PdeOptions& opt) {
  const HighestWeight& w = sigma.lambda;
  const DiffOp d1 = DiffOp::d(1), d2 = DiffOp::d(2), d3 = DiffOp::d(3);
  const DiffOp y1 = DiffOp::y(1), y2 = DiffOp::y(2), y3 = DiffOp::y(3);
  const cplx k2 = double(sigma.k2);
  const cplx g1 = sigma.gamma[0] + opt.gamma_shift[0], g2 = sigma.gamma[1] + opt.gamma_shift[1];
  const cplx g3 = sigma.gamma[2] + opt.gamma_shift[2], g4 = sigma.gamma[3] + opt.gamma_shift[3];
  auto K = build_k_operators(sigma, l, opt.literal_k1234);
  for (auto& [name, c] : K) c = maybe_reduce(w, c, opt.reduce_targets);
  Combo self = maybe_reduce(w, single_target(w, l), opt.reduce_targets);

  const DiffOp d3k = d3 - k2;
  DiffOp D2 = -(d1 * d1) - d2 * d2 - d3k * d3k + d1 * d2 + d2 * d3k + g1 * d3k + y1 * y1 + y2 * y2 + y3 * y3 - g2;
  DiffOp D3 = d2 * (d1 - d3 + k2) * (d1 - d2 + d3 - k2) - g1 * (d1 * d1 + d2 * d2 - d1 * d2 - d2 * d3 + k2 * d2) +
              y1 * y1 * (-d2 + g1) + y2 * y2 * (d1 - d3 + g1 + k2) + y3 * y3 * d2 - g3;
  const DiffOp e = -d3 + g1 + k2;
  DiffOp D4 = d1 * (d2 - d1) * (d3 - d2 - k2) * e + y1 * y1 * (d3 - d2 - k2) * e + y2 * y2 * d1 * e +
              y3 * y3 * d1 * (d2 - d1) + y1 * y1 * y3 * y3 - g4;

  std::vector<MellinOperator> out(3);
  out[0].name = "C2";
  out[0].add(D2, self);
  out[0].add(-y1, K["K12"]);
  out[0].add(-y2, K["K23"]);
  out[0].add(-y3, K["K34"]);

  out[1].name = "C3";
  out[1].add(D3, self);
  out[1].add(y1 * (d2 - g1), K["K12"]);
  out[1].add(y2 * (-d1 + d3 - g1 - k2), K["K23"]);
  out[1].add(-(y3 * d2), K["K34"]);
  out[1].add(y1 * y2, K["K13"]);
  out[1].add(y2 * y3, K["K24"]);

  out[2].name = "C4";
  out[2].add(D4, self);
  out[2].add(-(y1 * ((-d2 + d3 - k2) * e + y3 * y3)), K["K12"]);
  out[2].add(-(y2 * d1 * e), K["K23"]);
  out[2].add(-(y3 * (d1 * (-d1 + d2) + y1 * y1)), K["K34"]);
  out[2].add(y1 * y2 * e, K["K13"]);
  out[2].add(y2 * y3 * d1, K["K24"]);
  out[2].add(y1 * y2 * y3, K["K14"]);
  out[2].add(y1 * y3, K["K12_34"]);
  return out;
}

namespace {

// Sum of (operator, coefficient, index offset) pieces of one first-order equation.
struct EqBuilder {
  const HighestWeight& w;
  const GenIndex& l;
  bool reduce;
  MellinOperator op;
  void add(const DiffOp& d, long coef, const GenIndex& delta) {
    if (coef == 0) return;
    GenIndex t = l + delta;
    if (!nonnegative(t) || !in_S(w, t)) return;
    Combo c;
    c[t] = mpq_class(coef);
    op.add(d, maybe_reduce(w, c, reduce));
  }
};

}  // namespace

std::vector<MellinOperator> ds_operators_ii(const InducingDatum& sigma, const GenIndex& l, const PdeOptions& opt) {
  if (!(sigma.k1 > sigma.k2))
    throw Error(ErrorCode::PreconditionViolation, "first-order equations (ii) need kappa1 > kappa2");
  HighestWeight base{sigma.k1 - 1, sigma.k2, sigma.d3};
  if (!in_S(base, l)) throw Error(ErrorCode::InvalidIndex, index_str(l) + " is not in S_" + weight_str(base));
  const HighestWeight& w = sigma.lambda;
  const DiffOp d1 = DiffOp::d(1), d2 = DiffOp::d(2), d3 = DiffOp::d(3);
  const DiffOp y1 = DiffOp::y(1), y2 = DiffOp::y(2), y3 = DiffOp::y(3);
  const cplx nu1p = sigma.nu1p + opt.nu_shift, g1 = sigma.gamma[0] + opt.gamma_shift[0];
  const cplx h = 0.5 * (sigma.k1 - 1), k2 = double(sigma.k2);
  const long l1 = l[L1], l2 = l[L2], l3 = l[L3], l4 = l[L4];
  const long l13 = l[L13], l14 = l[L14], l23 = l[L23], l24 = l[L24];
  std::vector<MellinOperator> out;

  EqBuilder a{w, l, opt.reduce_targets, {"DS1", {}}};
  a.add(d1 - nu1p - h, 1, u(1));
  a.add(y1, 1, u(2));
  out.push_back(a.op);

  EqBuilder b{w, l, opt.reduce_targets, {"DS2", {}}};
  b.add(-d1 + d2 - nu1p - h + double(l1), 1, u(2));
  b.add(y1, -1, u(1));
  b.add(y2, 1, u(3));
  b.add(1.0, l2, 2 * u(1) - u(2));
  b.add(1.0, l13, u(1) - u(1, 3) + u(2, 3));
  b.add(1.0, l14, u(1) - u(1, 4) + u(2, 4));
  b.add(1.0, l23, u(1) - u(2, 3) + u(1, 3));
  b.add(1.0, l24, u(1) - u(2, 4) + u(1, 4));
  out.push_back(b.op);

  EqBuilder c{w, l, opt.reduce_targets, {"DS3", {}}};
  c.add(-d2 + d3 - nu1p + h - k2 - double(l4), 1, u(3));
  c.add(y2, -1, u(2));
  c.add(y3, 1, u(4));
  c.add(1.0, -l3, 2 * u(4) - u(3));
  c.add(1.0, -l13, u(4) - u(1, 3) + u(1, 4));
  c.add(1.0, -l14, u(4) - u(1, 4) + u(1, 3));
  c.add(1.0, -l23, u(4) - u(2, 3) + u(2, 4));
  c.add(1.0, -l24, u(4) - u(2, 4) + u(2, 3));
  out.push_back(c.op);

  EqBuilder e{w, l, opt.reduce_targets, {"DS4", {}}};
  e.add(-d3 + g1 - nu1p + h + k2, 1, u(4));
  e.add(y3, -1, u(3));
  out.push_back(e.op);
  return out;
}

std::vector<MellinOperator> ds_operators_iii(const InducingDatum& sigma, const GenIndex& l,
                                             const PdeOptions& opt) {
  if (!(sigma.k2 >= 1)) throw Error(ErrorCode::PreconditionViolation, "first-order equations (iii) need kappa2 >= 1");
  HighestWeight base{sigma.k1 - 1, sigma.k2 - 1, 0};
  if (!in_S(base, l)) throw Error(ErrorCode::InvalidIndex, index_str(l) + " is not in S_" + weight_str(base));
  const HighestWeight& w = sigma.lambda;
  const DiffOp d1 = DiffOp::d(1), d2 = DiffOp::d(2), d3 = DiffOp::d(3);
  const DiffOp y1 = DiffOp::y(1), y2 = DiffOp::y(2), y3 = DiffOp::y(3);
  const cplx N = sigma.nu[0] + sigma.nu[1] + 2.0 * opt.nu_shift, g1 = sigma.gamma[0] + opt.gamma_shift[0];
  const double k1 = sigma.k1, k2 = sigma.k2, h = 0.5 * (k1 + k2), m = 0.5 * (k1 - 3 * k2);
  const long l2 = l[L2], l3 = l[L3], l4 = l[L4];
  const long l13 = l[L13], l14 = l[L14], l23 = l[L23], l24 = l[L24];
  const double lsum = double(l13 + l14 + l23 + l24);
  const bool r = opt.reduce_targets;
  std::vector<MellinOperator> out;

  EqBuilder a{w, l, r, {"DS12", {}}};
  a.add(d2 - N - h + 1.0, 1, u(1, 2));
  a.add(y2, 1, u(1, 3));
  out.push_back(a.op);

  EqBuilder b{w, l, r, {"DS13", {}}};
  b.add(d1 - d2 + d3 - N - h - lsum, 1, u(1, 3));
  b.add(y1, 1, u(2, 3));
  b.add(y2, -1, u(1, 2));
  b.add(y3, 1, u(1, 4));
  b.add(1.0, l2, u(3) - u(2) + u(1, 2));
  b.add(1.0, l3, u(2) - u(3) + u(1, 2));
  b.add(1.0, l13, 2 * u(1, 2) - u(1, 3));
  b.add(1.0, l24, u(1, 2) + u(3, 4) - u(2, 4));
  out.push_back(b.op);

  EqBuilder c{w, l, r, {"DS14", {}}};
  c.add(d1 - d3 + g1 - N - m + double(l4), 1, u(1, 4));
  c.add(y1, 1, u(2, 4));
  c.add(y3, -1, u(1, 3));
  c.add(1.0, l2, u(4) - u(2) + u(1, 2));
  c.add(1.0, l3, u(4) - u(3) + u(1, 3));
  out.push_back(c.op);

  EqBuilder e{w, l, r, {"DS23", {}}};
  e.add(-d1 + d3 - N + m - double(l4), 1, u(2, 3));
  e.add(y1, -1, u(1, 3));
  e.add(y3, 1, u(2, 4));
  e.add(1.0, -l2, u(4) - u(2) + u(3, 4));
  e.add(1.0, -l3, u(4) - u(3) + u(2, 4));
  out.push_back(e.op);

  EqBuilder f{w, l, r, {"DS24", {}}};
  f.add(-d1 + d2 - d3 + g1 - N + h + lsum, 1, u(2, 4));
  f.add(y1, -1, u(1, 4));
  f.add(y2, 1, u(3, 4));
  f.add(y3, -1, u(2, 3));
  f.add(1.0, -l2, u(3) - u(2) + u(3, 4));
  f.add(1.0, -l3, u(2) - u(3) + u(3, 4));
  f.add(1.0, -l13, u(1, 2) + u(3, 4) - u(1, 3));
  f.add(1.0, -l24, 2 * u(3, 4) - u(2, 4));
  out.push_back(f.op);

  EqBuilder g{w, l, r, {"DS34", {}}};
  g.add(-d2 + g1 - N + h - 1.0, 1, u(3, 4));
  g.add(y2, -1, u(2, 4));
  out.push_back(g.op);
  return out;
}

IdentityReport check_operators(const std::string& name, const InducingDatum& sigma,
                               const std::vector<MellinOperator>& ops, const std::vector<S3>& samples, double tol,
                               std::map<std::string, double>* per_equation) {
  IdentityReport rep;
  rep.name = name;
  rep.tolerance = tol;
  for (const auto& s : samples) {
    KernelCache cache(sigma, s);
    Point pt = point_of(s);
    std::string where = "s=(" + format_complex(s[0], 6) + ", " + format_complex(s[1], 6) + ", " +
                        format_complex(s[2], 6) + ")";
    for (const auto& op : ops) {
      OperatorValue v = eval_op(op, pt, cache);
      if (v.max_term == 0.0) continue;
      double rel = std::abs(v.value) / v.max_term;
      rep.record(op.name + " " + where, v.value, 0.0, rel);
      rep.err_est = std::max(rep.err_est, v.err_est);
      if (per_equation) {
        double& e = (*per_equation)[op.name];
        e = std::max(e, rel);
      }
    }
  }
  return rep;
}

IdentityReport check_capelli(const InducingDatum& sigma, const GenIndex& l, const std::vector<S3>& samples,
                             const PdeOptions& opt) {
  if (!in_S(sigma.lambda, l))
    throw Error(ErrorCode::InvalidIndex, index_str(l) + " is not in S_" + weight_str(sigma.lambda));
  return check_operators("capelli " + sigma.case_label() + " l=" + index_str(l), sigma,
                         capelli_operators(sigma, l, opt), samples, opt.tol);
}

IdentityReport check_capelli_all(const InducingDatum& sigma, const std::vector<S3>& samples, const PdeOptions& opt) {
  std::vector<MellinOperator> ops;
  for (const auto& l : enumerate_S(sigma.lambda))
    for (auto& op : capelli_operators(sigma, l, opt)) {
      op.name += " l=" + index_str(l);
      ops.push_back(std::move(op));
    }
  return check_operators("capelli " + sigma.case_label(), sigma, ops, samples, opt.tol);
}

IdentityReport check_dirac_schmid(const InducingDatum& sigma, const std::string& which,
                                  const std::vector<S3>& samples, const PdeOptions& opt) {
  if (which != "ii" && which != "iii" && which != "all")
    throw Error(ErrorCode::DomainViolation, "first-order family must be ii, iii or all");
  std::vector<MellinOperator> ops;
  auto collect = [&](const std::vector<MellinOperator>& v, const GenIndex& l) {
    for (auto op : v) {
      op.name += " l=" + index_str(l);
      ops.push_back(std::move(op));
    }
  };
  bool want_ii = which == "ii" || (which == "all" && sigma.k1 > sigma.k2);
  bool want_iii = which == "iii" || (which == "all" && sigma.k2 >= 1);
  if (which == "ii" && !(sigma.k1 > sigma.k2))
    throw Error(ErrorCode::PreconditionViolation, "first-order equations (ii) need kappa1 > kappa2");
  if (which == "iii" && !(sigma.k2 >= 1))
    throw Error(ErrorCode::PreconditionViolation, "first-order equations (iii) need kappa2 >= 1");
  if (want_ii)
    for (const auto& l : enumerate_S({sigma.k1 - 1, sigma.k2, sigma.d3})) collect(ds_operators_ii(sigma, l, opt), l);
  if (want_iii)
    for (const auto& l : enumerate_S({sigma.k1 - 1, sigma.k2 - 1, 0})) collect(ds_operators_iii(sigma, l, opt), l);
  return check_operators("dirac-schmid " + sigma.case_label(), sigma, ops, samples, opt.tol);
}

std::vector<S3> sample_points(int n, std::uint64_t seed, double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(lo, hi), im(-1.0, 1.0);
  std::vector<S3> out;
  for (int k = 0; k < n; ++k) {
    S3 s;
    for (auto& z : s) {
      double a = re(rng);
      double b = im(rng);
      z = cplx(a, b);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace gl4
