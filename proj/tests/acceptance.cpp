#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gl4/bf.hpp"
#include "gl4/gamma.hpp"
#include "gl4/identities.hpp"
#include "gl4/kernels.hpp"
#include "gl4/pde.hpp"
#include "gl4/rep.hpp"

using namespace gl4;

namespace {

struct Outcome {
  bool pass = true;
  double max_err = 0.0;
  double tol = 0.0;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  bool slow;
  std::function<Outcome()> run;
};

cplx rand_c(std::mt19937_64& g, double lo, double hi, double im = 1.0) {
  std::uniform_real_distribution<double> re(lo, hi), ig(-im, im);
  return {re(g), ig(g)};
}

void fold(Outcome& o, const IdentityReport& r) {
  o.max_err = std::max(o.max_err, r.max_rel_err);
  if (!r.pass) {
    o.pass = false;
    if (o.detail.empty()) o.detail = r.name;
  }
}

void fold(Outcome& o, const std::string& name, double err, double tol) {
  o.max_err = std::max(o.max_err, err);
  if (!(err <= tol)) {
    o.pass = false;
    if (o.detail.empty()) o.detail = name;
  }
}

std::vector<InducingDatum> family_sample() {
  std::vector<cplx> n4 = {0.11, -0.07, 0.05, -0.13}, n3 = {0.09, -0.06, 0.12}, n2 = {0.08, -0.05};
  return {
      make_sigma(Family::P1111, n4, {}, {0, 0, 0, 0}), make_sigma(Family::P1111, n4, {}, {1, 0, 0, 0}),
      make_sigma(Family::P1111, n4, {}, {1, 1, 0, 0}), make_sigma(Family::P1111, n4, {}, {1, 1, 1, 0}),
      make_sigma(Family::P211, n3, {2}, {0, 0}),       make_sigma(Family::P211, n3, {2}, {1, 1}),
      make_sigma(Family::P211, n3, {2}, {1, 0}),       make_sigma(Family::P211, n3, {3}, {1, 0}),
      make_sigma(Family::P22, n2, {2, 2}, {}),         make_sigma(Family::P22, n2, {3, 2}, {}),
      make_sigma(Family::P22, n2, {3, 3}, {}),
  };
}

Outcome c1_gamma() {
  Outcome o;
  o.tol = 1e-12;
  std::mt19937_64 g(11);
  const double tp = 2.0 * std::numbers::pi;
  for (int k = 0; k < 1000; ++k) {
    cplx s = rand_c(g, -6.0, 8.0, 6.0);
    fold(o, "Gamma_R shift", rel_diff(gamma_R(s + 2.0), s / tp * gamma_R(s)), o.tol);
    fold(o, "Gamma_C shift", rel_diff(gamma_C(s + 1.0), s / tp * gamma_C(s)), o.tol);
    fold(o, "duplication", rel_diff(gamma_R(s) * gamma_R(s + 1.0), gamma_C(s)), o.tol);
  }
  return o;
}

Outcome c2_barnes() {
  Outcome o;
  o.tol = 1e-8;
  std::mt19937_64 g(12);
  for (int k = 0; k < 100; ++k) {
    cplx a1 = rand_c(g, 0.3, 2.0), a2 = rand_c(g, 0.3, 2.0), b1 = rand_c(g, 0.3, 2.0), b2 = rand_c(g, 0.3, 2.0);
    KernelValue lhs = eval_mb(barnes_first_integral(a1, a2, b1, b2), 1e-11);
    fold(o, "Barnes first", rel_diff(lhs.value, barnes_first(a1, a2, b1, b2)), o.tol);
  }
  for (int k = 0; k < 100; ++k) {
    cplx a1 = rand_c(g, 0.3, 2.0), a2 = rand_c(g, 0.3, 2.0), b1 = rand_c(g, 0.3, 2.0), b2 = rand_c(g, 0.3, 2.0),
         b3 = rand_c(g, 0.3, 2.0);
    KernelValue lhs = eval_mb(barnes_second_integral(a1, a2, b1, b2, b3), 1e-11);
    fold(o, "Barnes second", rel_diff(lhs.value, barnes_second(a1, a2, b1, b2, b3)), o.tol);
  }
  return o;
}

Outcome c3_saalschutz() {
  Outcome o;
  o.tol = 1e-10;
  std::mt19937_64 g(13);
  for (int k = 0; k < 20; ++k) {
    int m = k % 6;
    cplx a = rand_c(g, 0.3, 3.0), b = rand_c(g, 0.3, 3.0), c = rand_c(g, 2.0 * m + 0.3, 2.0 * m + 3.0);
    fold(o, saalschutz_check(a, b, c, m, o.tol));
  }
  return o;
}

Outcome c4_rep() {
  Outcome o;
  o.tol = 0.0;
  size_t checked = 0;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= 1; ++c) {
        HighestWeight w{a, b, c};
        if (!valid_weight(w)) continue;
        size_t expect = b > 0 ? size_t(2 * (a - b + 1) * (a + b + 1)) : size_t((a + 1) * (a + 1));
        std::string tag = weight_str(w);
        fold(o, "|S°| " + tag, S_circ_count(w) == expect ? 0.0 : 1.0, 0.0);
        fold(o, "rank " + tag, relation_rank(w) + S_circ_count(w) == S_count(w) ? 0.0 : 1.0, 0.0);
        if (a <= 3) {
          PropertyResult br = check_brackets(w), wt = check_weights(w);
          fold(o, "brackets " + tag, br.pass ? 0.0 : 1.0, 0.0);
          fold(o, "weights " + tag, wt.pass ? 0.0 : 1.0, 0.0);
          checked += br.checked + wt.checked;
        }
      }
  o.detail = o.pass ? std::to_string(checked) + " bracket/weight checks" : o.detail;
  return o;
}

Outcome c5_kernels() {
  Outcome o;
  o.tol = 1e-8;
  std::mt19937_64 g(15);
  Mu4 mu = {cplx(0.11, 0.02), cplx(-0.07, 0.03), cplx(0.05, -0.01), cplx(-0.12, 0.04)};
  for (int k = 0; k < 3; ++k) {
    S3 s = {rand_c(g, 1.5, 3.0), rand_c(g, 1.5, 3.0), rand_c(g, 2.5, 4.0)};
    cplx base = kernel_U(0, s, mu, 1e-11).value;
    std::array<int, 4> p = {0, 1, 2, 3};
    do {
      Mu4 m = {mu[p[0]], mu[p[1]], mu[p[2]], mu[p[3]]};
      fold(o, "U0 Weyl", rel_diff(kernel_U(0, s, m, 1e-11).value, base), 1e-8);
    } while (std::next_permutation(p.begin(), p.end()));
    cplx v = kernel_V_double(s, 0.0, 0.0, Poly(1.0), mu, 1e-8).value;
    fold(o, "V(0,0;1) = U0", rel_diff(v, base), 1e-6);
  }
  for (const Identity& id : load_corpus(default_corpus_path())) {
    bool want = id.name.rfind("shift_", 0) == 0 || id.name.rfind("Um_recursion", 0) == 0;
    if (!want) continue;
    IdentityReport r = verify_identity(id, 3, 5);
    fold(o, r);
  }
  for (const InducingDatum& sg : family_sample()) {
    std::vector<S3> pts = sample_points(3, 25);
    for (const GenIndex& l : enumerate_S(sg.lambda)) {
      if (l[1] + l[2] + l[5] + l[8] == 0) continue;
      KernelId id{sg, l};
      for (const S3& s : pts)
        fold(o, "DS shift " + sg.case_label(), rel_diff(kernel_hat(id, s, 1e-11).value, ds_shift_rhs(id, s, 1e-11).value),
             1e-8);
    }
  }
  return o;
}

std::vector<InducingDatum> holonomic_sample() {
  std::vector<cplx> n4 = {0.11, -0.07, 0.05, -0.13}, n3 = {0.09, -0.06, 0.12}, n2 = {0.08, -0.05};
  return {
      make_sigma(Family::P1111, n4, {}, {0, 0, 0, 0}), make_sigma(Family::P1111, n4, {}, {1, 0, 0, 0}),
      make_sigma(Family::P1111, n4, {}, {1, 1, 0, 0}), make_sigma(Family::P1111, n4, {}, {1, 1, 1, 0}),
      make_sigma(Family::P211, n3, {2}, {0, 0}),       make_sigma(Family::P211, n3, {2}, {1, 1}),
      make_sigma(Family::P211, n3, {2}, {1, 0}),       make_sigma(Family::P22, n2, {3, 2}, {}),
      make_sigma(Family::P22, n2, {2, 2}, {}),         make_sigma(Family::P22, n2, {3, 3}, {}),
  };
}

Outcome c6_holonomic() {
  Outcome o;
  o.tol = 1e-6;
  std::vector<S3> pts = sample_points(3, 26);
  double min_control = 1e300;
  for (const InducingDatum& sg : holonomic_sample()) {
    PdeOptions opt;
    fold(o, check_capelli_all(sg, pts, opt));
    if (sg.k1 > sg.k2 || sg.k2 >= 1) fold(o, check_dirac_schmid(sg, "all", pts, opt));
    PdeOptions bad;
    bad.gamma_shift = {0.1, 0.1, 0.1, 0.1};
    bad.nu_shift = 0.1;
    std::vector<S3> one(pts.begin(), pts.begin() + 1);
    double ctl = check_capelli_all(sg, one, bad).max_rel_err;
    if (sg.k1 > sg.k2 || sg.k2 >= 1) ctl = std::min(ctl, check_dirac_schmid(sg, "all", one, bad).max_rel_err);
    min_control = std::min(min_control, ctl);
  }
  if (!(min_control > 1e-3)) {
    o.pass = false;
    o.detail = "negative control below 1e-3";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "weakest negative control %.2e", min_control);
  if (o.detail.empty()) o.detail = buf;
  return o;
}

Outcome c7_special() {
  Outcome o;
  o.tol = 1e-8;
  std::mt19937_64 g(17);
  for (const InducingDatum& sg : family_sample()) {
    KernelId id{sg, special_value_index(sg)};
    for (int k = 0; k < 3; ++k) {
      cplx s1 = rand_c(g, 1.8, 3.0), s2 = rand_c(g, 1.8, 3.0);
      cplx v = kernel_hat(id, {s1, s2, s1 + s2}, 1e-11).value;
      fold(o, "special value " + sg.case_label(), rel_diff(v, special_value_closed(sg, s1, s2)), o.tol);
    }
  }
  return o;
}

Outcome c8_bf() {
  Outcome o;
  o.tol = 1e-6;
  for (const std::string& t : bf_case_tags()) fold(o, bf_verify(default_bf_case(t), 2));
  return o;
}

Outcome c9_bf_contragredient() {
  Outcome o;
  o.tol = 1e-6;
  for (const std::string& t : bf_case_tags()) fold(o, bf_verify_contragredient(default_bf_case(t), 1));
  return o;
}

Outcome c10_whittaker() {
  Outcome o;
  o.tol = 1e-2;
  InducingDatum sg = make_sigma(Family::P1111, {0.11, -0.07, 0.05, -0.13}, {}, {0, 0, 0, 0});
  KernelId id{sg, GenIndex{}};
  WhittakerGrid grid(id);
  std::vector<double> xs;
  for (int k = -24; k <= 24; ++k) xs.push_back(0.25 * k);
  for (S3 s : {S3{cplx(3.0, 0.3), cplx(3.0, -0.2), cplx(4.0, 0.45)}, S3{cplx(3.0, -0.6), cplx(3.0, 0.1), cplx(4.0, 0.0)}}) {
    cplx m = grid.mellin_transform(xs, s);
    cplx v = kernel_sigma_l(id, s, 1e-8).value / 8.0;
    fold(o, "Mellin round trip", rel_diff(m, v), o.tol);
  }
  o.detail = std::to_string(grid.samples()) + " contour samples";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  bool slow_only = false, with_slow = false;
  std::vector<int> only;
  app.add_flag("--slow-only", slow_only, "run only the slow criterion");
  app.add_flag("--with-slow", with_slow, "also run the slow criterion");
  app.add_option("--only", only, "run only these criteria");
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> all = {
      {1, "gamma functional equations", 1, false, c1_gamma},
      {2, "Barnes lemmas", 30, false, c2_barnes},
      {3, "Saalschutz sum", 1, false, c3_saalschutz},
      {4, "representation layer", 10, false, c4_rep},
      {5, "kernel identities", 300, false, c5_kernels},
      {6, "holonomic system", 600, false, c6_holonomic},
      {7, "special value", 60, false, c7_special},
      {8, "Bump-Friedberg zeta integrals", 900, false, c8_bf},
      {9, "contragredient epsilon identity", 600, false, c9_bf_contragredient},
      {10, "Whittaker Mellin round trip (slow)", 600, true, c10_whittaker},
  };
  int failed = 0;
  for (const Criterion& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    if (only.empty() && (slow_only ? !c.slow : (c.slow && !with_slow))) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs <= c.budget_s;
    bool ok = o.pass && in_time;
    if (!ok) ++failed;
    std::printf("[%s] criterion %d: %s  max_err=%.2e tol=%.0e time=%.2fs/%.0fs%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), o.max_err, o.tol, secs, c.budget_s, o.detail.empty() ? "" : "  ",
                (in_time ? o.detail : o.detail + " (over budget)").c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
