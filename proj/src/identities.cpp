#include "gl4/identities.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "json.hpp"

namespace gl4 {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const char* kQ = "_q";

bool kind_pole(GammaKind k, cplx z) {
  return k == GammaKind::R ? near_nonpositive_integer(0.5 * z, 0.5 * kPoleRadius) : near_nonpositive_integer(z);
}
}  // namespace

cplx eval_gamma_expr(const GammaExpr& e, const Point& pt) {
  cplx pre = e.prefactor.eval(pt) * std::pow(kTwoPi, double(e.two_pi_power));
  if (pre == cplx(0.0)) return 0.0;
  cplx ls = 0.0;
  for (size_t i = 0; i < e.factors.size(); ++i) {
    const auto& f = e.factors[i];
    cplx z = f.arg.eval(pt);
    if (kind_pole(f.kind, z)) {
      if (f.exponent < 0) return 0.0;
      throw Error(ErrorCode::PoleAt, "factor " + std::to_string(i) + " at argument " + format_complex(z));
    }
    ls += double(f.exponent) * log_gamma_kind(f.kind, z);
  }
  return pre * std::exp(ls);
}

cplx barnes_first(cplx a1, cplx a2, cplx b1, cplx b2) {
  for (cplx a : {a1, a2})
    for (cplx b : {b1, b2})
      if (!((a + b).real() > 0)) throw Error(ErrorCode::DomainViolation, "barnes_first needs Re(a_i+b_j) > 0");
  return std::exp(log_gamma_R(a1 + b1) + log_gamma_R(a1 + b2) + log_gamma_R(a2 + b1) + log_gamma_R(a2 + b2) -
                  log_gamma_R(a1 + a2 + b1 + b2));
}

cplx barnes_second(cplx a1, cplx a2, cplx b1, cplx b2, cplx b3) {
  cplx ls = 0.0;
  for (cplx a : {a1, a2})
    for (cplx b : {b1, b2, b3}) {
      if (!((a + b).real() > 0)) throw Error(ErrorCode::DomainViolation, "barnes_second needs Re(a_i+b_j) > 0");
      ls += log_gamma_R(a + b);
    }
  ls -= log_gamma_R(a1 + a2 + b1 + b2) + log_gamma_R(a1 + a2 + b1 + b3) + log_gamma_R(a1 + a2 + b2 + b3);
  return std::exp(ls);
}

MBTerm barnes_first_integral(cplx a1, cplx a2, cplx b1, cplx b2) {
  MBTerm t;
  t.nvars = 1;
  t.inner = {gRq(1, a1), gRq(1, a2), gRq(-1, b1), gRq(-1, b2)};
  return t;
}

MBTerm barnes_second_integral(cplx a1, cplx a2, cplx b1, cplx b2, cplx b3) {
  MBTerm t;
  t.nvars = 1;
  t.inner = {gRq(1, a1), gRq(1, a2), gRq(-1, b1), gRq(-1, b2), gRq(-1, b3), gRq(-1, a1 + a2 + b1 + b2 + b3, -1)};
  return t;
}

IdentityReport saalschutz_check(cplx a, cplx b, cplx c, int m, double tol) {
  if (m < 0 || !(a.real() > 0) || !(b.real() > 0) || !(c.real() > 2.0 * m))
    throw Error(ErrorCode::DomainViolation, "saalschutz_check needs Re a, Re b > 0, Re c > 2m, m >= 0");
  cplx lhs = 0.0;
  for (int j = 0; j <= m; ++j)
    lhs += binomial(m, j) * std::exp(log_gamma_R(a + 2.0 * j) + log_gamma_R(b + 2.0 * j) +
                                     log_gamma_R(c - 2.0 * j) - log_gamma_R(a + b + c + 2.0 * j - 2.0 * m));
  cplx rhs = std::exp(log_gamma_R(a) + log_gamma_R(b) + log_gamma_R(a + c) + log_gamma_R(b + c) +
                      log_gamma_R(c - 2.0 * m) - log_gamma_R(a + b + c) - log_gamma_R(a + c - 2.0 * m) -
                      log_gamma_R(b + c - 2.0 * m));
  IdentityReport r;
  r.name = "saalschutz m=" + std::to_string(m);
  r.tolerance = tol;
  std::ostringstream os;
  os << "a=" << format_complex(a) << " b=" << format_complex(b) << " c=" << format_complex(c);
  r.record(os.str(), lhs, rhs, rel_diff(lhs, rhs));
  return r;
}

namespace {

GammaFactorSym R(const Poly& p, int e = 1) { return {GammaKind::R, p, e}; }

}  // namespace

IdTerm make_U_term(const Poly& coef, const Poly& m, const std::vector<Poly>& s, const std::vector<Poly>& mu) {
  if (s.size() != 3 || mu.size() != 4) throw Error(ErrorCode::DomainViolation, "U term needs 3 s and 4 mu entries");
  Poly q = Poly::var(kQ);
  IdTerm t;
  t.coef = coef;
  const auto &s1 = s[0], &s2 = s[1], &s3 = s[2];
  const auto &m1 = mu[0], &m2 = mu[1], &m3 = mu[2], &m4 = mu[3];
  Poly sum = m1 + m2 + m3 + m4;
  t.outer.factors = {R(s1 + m1), R(s1 + m2), R(s2 + m1 + m2 - m), R(s2 + m3 + m4 + m), R(s3 + m1 + m3 + m4),
                     R(s3 + m2 + m3 + m4)};
  t.ivars = {kQ};
  t.integrand.factors = {R(s1 - q + m),       R(s2 - q + m1), R(s2 - q + m2),          R(s3 - q + m1 + m2 - m),
                         R(q + m3),           R(q + m4),      R(s1 + s2 - q + m1 + m2, -1),
                         R(s2 + s3 - q + sum, -1)};
  return t;
}

IdTerm make_Uprime_term(const Poly& coef, const std::vector<Poly>& s, const std::vector<Poly>& mu) {
  if (s.size() != 3 || mu.size() != 4) throw Error(ErrorCode::DomainViolation, "U' term needs 3 s and 4 mu entries");
  Poly q = Poly::var(kQ);
  Poly one(1.0);
  IdTerm t;
  t.coef = coef;
  const auto &s1 = s[0], &s2 = s[1], &s3 = s[2];
  const auto &m1 = mu[0], &m2 = mu[1], &m3 = mu[2], &m4 = mu[3];
  Poly sum = m1 + m2 + m3 + m4;
  t.outer.factors = {R(s1 + m1),          R(s1 + m2),          R(s2 + m1 + m2 - one), R(s2 + m3 + m4 + one),
                     R(s3 + m1 + m3 + m4 + one), R(s3 + m2 + m3 + m4 + one)};
  t.ivars = {kQ};
  t.integrand.factors = {R(s1 - q),           R(s2 - q + m1 - one), R(s2 - q + m2 - one), R(s3 - q + m1 + m2 - one),
                         R(q + m3),           R(q + m4),            R(s1 + s2 - q + m1 + m2 - one, -1),
                         R(s2 + s3 - q + sum, -1)};
  return t;
}

namespace {

MBTerm compile_term(const IdTerm& t, const Point& pt) {
  MBTerm mb;
  mb.coef = t.coef.eval(pt);
  if (mb.coef == cplx(0.0)) return mb;
  mb.coef *= std::pow(kTwoPi, double(t.outer.two_pi_power + t.integrand.two_pi_power));
  mb.coef *= t.outer.prefactor.shifted(t.shift).eval(pt);
  Poly ip = t.integrand.prefactor.shifted(t.shift).partial(pt);
  if (!ip.is_constant()) throw Error(ErrorCode::DomainViolation, "integrand prefactor must not involve contour variables");
  mb.coef *= ip.constant();
  for (const auto& f : t.outer.factors) {
    cplx z = f.arg.shifted(t.shift).eval(pt);
    if (kind_pole(f.kind, z) && f.exponent > 0) throw Error(ErrorCode::PoleAt, "outer factor at " + format_complex(z));
    mb.outer.push_back({f.kind, f.exponent, z, {0.0, 0.0}});
  }
  if (t.ivars.size() > 2) throw Error(ErrorCode::DomainViolation, "identity terms support at most two contours");
  mb.nvars = int(t.ivars.size());
  for (const auto& f : t.integrand.factors) {
    Poly p = f.arg.shifted(t.shift).partial(pt);
    LinFactor lf;
    lf.kind = f.kind;
    lf.exp = f.exponent;
    for (size_t v = 0; v < t.ivars.size(); ++v) {
      cplx a = p.linear_coeff(t.ivars[v]);
      if (a.imag() != 0.0) throw Error(ErrorCode::DomainViolation, "contour variable coefficient must be real");
      lf.a[v] = a.real();
      p = p.without(t.ivars[v]);
    }
    if (!p.is_constant()) throw Error(ErrorCode::DomainViolation, "unbound variable in integrand: " + p.str());
    lf.b = p.constant();
    if (mb.nvars == 0) {
      if (kind_pole(f.kind, lf.b) && f.exponent > 0) throw Error(ErrorCode::PoleAt, "factor at " + format_complex(lf.b));
      mb.outer.push_back(lf);
    } else {
      mb.inner.push_back(lf);
    }
  }
  return mb;
}

std::string point_str(const Point& pt) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : pt) {
    if (!first) os << " ";
    first = false;
    os << k << "=" << format_complex(v, 8);
  }
  return os.str();
}

}  // namespace

KernelValue eval_side(const std::vector<IdTerm>& side, const Point& pt, double tol) {
  KernelValue acc;
  for (const auto& t : side) acc = acc + eval_mb(compile_term(t, pt), tol);
  return acc;
}

IdentityReport verify_identity(const std::vector<IdTerm>& lhs, const std::vector<IdTerm>& rhs,
                               const std::vector<VarBox>& free_vars, const Point& consts, int n_samples, double tol,
                               std::uint64_t seed) {
  IdentityReport rep;
  rep.tolerance = tol;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int k = 0; k < n_samples; ++k) {
    for (int attempt = 0;; ++attempt) {
      Point pt = consts;
      for (const auto& v : free_vars)
        pt[v.name] = cplx(v.re_lo + (v.re_hi - v.re_lo) * U(rng), v.im_lo + (v.im_hi - v.im_lo) * U(rng));
      try {
        double qtol = std::min(1e-10, tol * 1e-2);
        KernelValue L = eval_side(lhs, pt, qtol), Rv = eval_side(rhs, pt, qtol);
        rep.err_est = std::max(rep.err_est, L.err_est + Rv.err_est);
        rep.record(point_str(pt), L.value, Rv.value, rel_diff(L.value, Rv.value));
        break;
      } catch (const Error& e) {
        bool retry = e.code() == ErrorCode::PoleAt || e.code() == ErrorCode::NaNEncountered;
        if (!retry || attempt >= 5) throw;
      }
    }
  }
  return rep;
}

IdentityReport verify_identity(const Identity& id, int n_samples, std::uint64_t seed, double tol) {
  IdentityReport r = verify_identity(id.lhs, id.rhs, id.vars, id.consts, n_samples, tol > 0 ? tol : id.tol, seed);
  r.name = id.name;
  return r;
}

namespace {

using nlohmann::json;

GammaKind parse_kind(const std::string& k) {
  if (k == "R") return GammaKind::R;
  if (k == "C") return GammaKind::C;
  throw Error(ErrorCode::ParseError, "gamma kind must be R or C, got '" + k + "'");
}

std::vector<GammaFactorSym> parse_factors(const json& arr) {
  std::vector<GammaFactorSym> out;
  for (const auto& f : arr) {
    if (!f.is_array() || f.size() < 2 || f.size() > 3) throw Error(ErrorCode::ParseError, "gamma factor: " + f.dump());
    GammaFactorSym g;
    g.kind = parse_kind(f[0].get<std::string>());
    g.arg = parse_poly(f[1].get<std::string>());
    g.exponent = f.size() == 3 ? f[2].get<int>() : 1;
    if (g.exponent == 0) throw Error(ErrorCode::ParseError, "zero exponent in " + f.dump());
    out.push_back(g);
  }
  return out;
}

std::vector<Poly> parse_poly_list(const json& arr) {
  std::vector<Poly> out;
  for (const auto& e : arr) out.push_back(parse_poly(e.get<std::string>()));
  return out;
}

IdTerm parse_term(const json& j) {
  Poly coef = parse_poly(j.value("coef", std::string("1")));
  IdTerm t;
  if (j.contains("U")) {
    const auto& u = j["U"];
    t = make_U_term(coef, parse_poly(u.value("m", std::string("0"))), parse_poly_list(u.at("s")),
                    parse_poly_list(u.at("mu")));
  } else if (j.contains("Uprime")) {
    const auto& u = j["Uprime"];
    t = make_Uprime_term(coef, parse_poly_list(u.at("s")), parse_poly_list(u.at("mu")));
  } else {
    t.coef = coef;
    if (j.contains("gammas")) t.outer.factors = parse_factors(j["gammas"]);
    if (j.contains("integral")) {
      const auto& in = j["integral"];
      for (const auto& v : in.at("vars")) t.ivars.push_back(v.get<std::string>());
      t.integrand.factors = parse_factors(in.at("gammas"));
    }
  }
  t.outer.two_pi_power += j.value("two_pi", 0);
  if (j.contains("shift"))
    for (const auto& [k, v] : j["shift"].items()) t.shift[k] = v.get<int>();
  return t;
}

VarBox parse_var(const json& v) {
  VarBox b;
  if (v.is_string()) {
    b.name = v.get<std::string>();
  } else {
    b.name = v.at("name").get<std::string>();
  }
  bool svar = !b.name.empty() && (b.name[0] == 's' || b.name[0] == 't');
  if (!svar) {
    b.re_lo = -0.2;
    b.re_hi = 0.2;
  }
  if (v.is_object()) {
    if (v.contains("re")) {
      b.re_lo = v["re"][0].get<double>();
      b.re_hi = v["re"][1].get<double>();
    }
    if (v.contains("im")) {
      b.im_lo = v["im"][0].get<double>();
      b.im_hi = v["im"][1].get<double>();
    }
  }
  return b;
}

}  // namespace

std::vector<Identity> parse_corpus(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("corpus is not valid JSON: ") + e.what());
  }
  if (doc.value("schema_version", 0) != 1) throw Error(ErrorCode::ParseError, "corpus schema_version must be 1");
  std::vector<Identity> out;
  try {
    for (const auto& r : doc.at("identities")) {
      Identity id;
      id.name = r.at("name").get<std::string>();
      id.description = r.value("description", std::string());
      id.tol = r.value("tol", 1e-8);
      for (const auto& v : r.value("vars", json::array())) id.vars.push_back(parse_var(v));
      json consts = r.value("consts", json::object());
      for (const auto& [k, v] : consts.items()) id.consts[k] = v.get<double>();
      for (const auto& t : r.at("lhs")) id.lhs.push_back(parse_term(t));
      for (const auto& t : r.at("rhs")) id.rhs.push_back(parse_term(t));
      out.push_back(std::move(id));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("corpus record: ") + e.what());
  }
  return out;
}

std::vector<Identity> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open corpus " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str());
}

std::string default_corpus_path() {
#ifdef GL4_DATA_DIR
  return std::string(GL4_DATA_DIR) + "/identities.json";
#else
  return "data/identities.json";
#endif
}

}  // namespace gl4
