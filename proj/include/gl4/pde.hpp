#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "gl4/kernels.hpp"
#include "gl4/poly.hpp"
#include "gl4/rep.hpp"
#include "gl4/report.hpp"

namespace gl4 {

using Shift3 = std::array<int, 3>;

// Differential operator in Mellin form: f(s) -> sum_shift P_shift(s) (2 pi)^{|shift|} f(s + shift).
// Polynomials are in the variables s1, s2, s3.
class DiffOp {
 public:
  DiffOp() = default;
  DiffOp(cplx c);    // NOLINT: constants convert implicitly
  DiffOp(double c);  // NOLINT
  static DiffOp d(int i);  // y_i d/dy_i  ->  -s_i
  static DiffOp y(int i);  // 2 pi y_i    ->  shift by e_i

  friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
  DiffOp operator-() const;
  // Composition: (A * B) f = A (B f).
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);

  const std::map<Shift3, Poly>& terms() const { return terms_; }

 private:
  void add(const Shift3& sh, const Poly& p);
  std::map<Shift3, Poly> terms_;
};

struct MellinTerm {
  Poly poly = Poly(1.0);
  Shift3 shift{0, 0, 0};
  Combo target;
};

struct MellinOperator {
  std::string name;
  std::vector<MellinTerm> terms;
  void add(const DiffOp& op, const Combo& target);
};

// Memo of hatted kernel values at s + shift for one sigma and base point.
class KernelCache {
 public:
  KernelCache(const InducingDatum& sigma, const S3& s, double tol = -1.0) : sigma_(sigma), s_(s), tol_(tol) {}
  cplx get(const GenIndex& l, const Shift3& shift);
  double max_err() const { return max_err_; }
  size_t evaluations() const { return memo_.size(); }
  const S3& point() const { return s_; }

 private:
  InducingDatum sigma_;
  S3 s_;
  double tol_;
  std::map<std::pair<GenIndex, Shift3>, cplx> memo_;
  double max_err_ = 0.0;
};

struct OperatorValue {
  cplx value = 0.0;
  double max_term = 0.0;  // largest |contribution| of a single (term, target) pair
  double err_est = 0.0;
};

OperatorValue apply_mellin_operator(const MellinOperator& op, KernelCache& cache);
OperatorValue apply_mellin_operator(const MellinOperator& op, const InducingDatum& sigma, const S3& s);

struct PdeOptions {
  std::array<cplx, 4> gamma_shift{};  // added to gamma_i in the operators only (negative controls)
  cplx nu_shift = 0.0;                // added to the nu parameters of the first-order equations only
  bool reduce_targets = false;        // reduce every target to the basis of S°_lambda first
  bool literal_k1234 = false;         // use e23 instead of e1 in the l2 l14 entry of K_{12,34}
  double tol = 1e-6;
};

// The seven K-combinations applied to u_l, with indices outside S_lambda dropped.
std::map<std::string, Combo> build_k_operators(const InducingDatum& sigma, const GenIndex& l,
                                               bool literal_k1234 = false);

// The three Capelli equations for hat-phi_l.
std::vector<MellinOperator> capelli_operators(const InducingDatum& sigma, const GenIndex& l,
                                              const PdeOptions& opt = {});
// First-order equations: family (ii) needs kappa1 > kappa2, l in S_{(kappa1-1,kappa2,delta3)};
// family (iii) needs kappa2 >= 1, l in S_{(kappa1-1,kappa2-1,0)}.
std::vector<MellinOperator> ds_operators_ii(const InducingDatum& sigma, const GenIndex& l, const PdeOptions& opt = {});
std::vector<MellinOperator> ds_operators_iii(const InducingDatum& sigma, const GenIndex& l,
                                             const PdeOptions& opt = {});

// Residual |sum| / max term over the samples, one report per equation name.
IdentityReport check_operators(const std::string& name, const InducingDatum& sigma,
                               const std::vector<MellinOperator>& ops, const std::vector<S3>& samples,
                               double tol, std::map<std::string, double>* per_equation = nullptr);

IdentityReport check_capelli(const InducingDatum& sigma, const GenIndex& l, const std::vector<S3>& samples,
                             const PdeOptions& opt = {});
// which: "ii", "iii" or "all" (every applicable family and every base index).
IdentityReport check_dirac_schmid(const InducingDatum& sigma, const std::string& which,
                                  const std::vector<S3>& samples, const PdeOptions& opt = {});
// Capelli for every l in S_lambda.
IdentityReport check_capelli_all(const InducingDatum& sigma, const std::vector<S3>& samples,
                                 const PdeOptions& opt = {});

// Random points with Re s_i in [lo, hi] (Im in [-1, 1]), deterministic in the seed.
std::vector<S3> sample_points(int n, std::uint64_t seed, double lo = 2.5, double hi = 3.5);

}  // namespace gl4
