#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gl4/bf.hpp"
#include "gl4/gamma.hpp"
#include "gl4/identities.hpp"
#include "gl4/kernels.hpp"
#include "gl4/lfactors.hpp"
#include "gl4/pde.hpp"
#include "gl4/rep.hpp"
#include "gl4/sigma.hpp"

using namespace gl4;
using json = nlohmann::ordered_json;

namespace {

// ---- parsing helpers

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

int parse_int(const std::string& s) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw Error(ErrorCode::ParseError, "malformed integer '" + s + "'");
  return v;
}

double parse_double(const std::string& s) {
  cplx z = parse_complex(s);
  if (z.imag() != 0.0) throw Error(ErrorCode::ParseError, "expected a real number, got '" + s + "'");
  return z.real();
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  if (trim(s).empty()) return out;
  for (const auto& t : split(s)) out.push_back(parse_int(t));
  return out;
}

std::vector<cplx> parse_complexes(const std::string& s) {
  std::vector<cplx> out;
  if (trim(s).empty()) return out;
  for (const auto& t : split(s)) out.push_back(parse_complex(t));
  return out;
}

// key=value lines, '#' comments.
std::map<std::string, std::string> read_kv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    std::string t = trim(line.substr(0, line.find('#')));
    if (t.empty()) continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::ParseError, path + ":" + std::to_string(n) + ": expected key=value");
    kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return kv;
}

// ---- run configuration

struct RunConfig {
  QuadConfig quad;
  std::uint64_t seed = 1;
  std::string format = "json";
  bool timing = false;
};

void apply_config_file(RunConfig& rc, const std::string& path) {
  for (const auto& [k, v] : read_kv_file(path)) {
    if (k == "step") rc.quad.step = parse_double(v);
    else if (k == "height") rc.quad.height = parse_double(v);
    else if (k == "refinements") rc.quad.max_refinements = parse_int(v);
    else if (k == "tol1") rc.quad.tol1 = parse_double(v);
    else if (k == "tol2") rc.quad.tol2 = parse_double(v);
    else if (k == "tol3") rc.quad.tol3 = parse_double(v);
    else if (k == "tail_cut") rc.quad.tail_cut = parse_double(v);
    else if (k == "min_height") rc.quad.min_height = parse_double(v);
    else if (k == "seed") rc.seed = std::uint64_t(parse_int(v));
    else if (k == "format") rc.format = v;
    else throw Error(ErrorCode::ParseError, "unknown config key '" + k + "'");
  }
}

void validate(const RunConfig& rc) {
  const QuadConfig& q = rc.quad;
  if (!(q.step > 0 && q.height > 0 && q.tol1 > 0 && q.tol2 > 0 && q.tol3 > 0 && q.max_refinements >= 0))
    throw Error(ErrorCode::DomainViolation, "quadrature step, height and tolerances must be positive");
  if (rc.format != "json" && rc.format != "csv" && rc.format != "text")
    throw Error(ErrorCode::ParseError, "format must be json, csv or text");
}

json config_json(const RunConfig& rc) {
  const QuadConfig& q = rc.quad;
  return {{"step", q.step},         {"height", q.height}, {"refinements", q.max_refinements},
          {"tol1", q.tol1},         {"tol2", q.tol2},     {"tol3", q.tol3},
          {"tail_cut", q.tail_cut}, {"min_height", q.min_height}, {"seed", rc.seed}};
}

// ---- sigma flags

struct SigmaArgs {
  std::string family, nu, kappa, delta, file;
  bool given() const { return !family.empty() || !file.empty(); }
};

void add_sigma_options(CLI::App* sub, SigmaArgs& a) {
  sub->add_option("--family", a.family, "P1111, P211 or P22");
  sub->add_option("--nu", a.nu, "comma-separated complex nu");
  sub->add_option("--kappa", a.kappa, "comma-separated D-type weights");
  sub->add_option("--delta", a.delta, "comma-separated signs (0/1)");
  sub->add_option("--sigma-file", a.file, "key=value file with family, nu, kappa, delta");
}

InducingDatum build_sigma(SigmaArgs a) {
  if (!a.file.empty()) {
    auto kv = read_kv_file(a.file);
    for (const auto& [k, v] : kv)
      if (k != "family" && k != "nu" && k != "kappa" && k != "delta")
        throw Error(ErrorCode::ParseError, "unknown sigma key '" + k + "'");
    if (a.family.empty() && kv.count("family")) a.family = kv["family"];
    if (a.nu.empty() && kv.count("nu")) a.nu = kv["nu"];
    if (a.kappa.empty() && kv.count("kappa")) a.kappa = kv["kappa"];
    if (a.delta.empty() && kv.count("delta")) a.delta = kv["delta"];
  }
  if (a.family.empty()) throw Error(ErrorCode::DomainViolation, "sigma needs --family or --sigma-file");
  Family f = parse_family(a.family);
  std::vector<cplx> nu = parse_complexes(a.nu);
  std::vector<int> kappa = parse_ints(a.kappa), delta = parse_ints(a.delta);
  size_t n_nu = f == Family::P1111 ? 4 : f == Family::P211 ? 3 : 2;
  size_t n_delta = f == Family::P1111 ? 4 : f == Family::P211 ? 2 : 0;
  if (a.nu.empty()) nu.assign(n_nu, 0.0);
  if (a.delta.empty()) delta.assign(n_delta, 0);
  return make_sigma(f, nu, kappa, delta);
}

json sigma_json(const InducingDatum& s) {
  json nu = json::array();
  for (cplx z : s.nu) nu.push_back(format_complex(z, 15));
  return {{"family", family_name(s.family)}, {"nu", nu},
          {"kappa", s.kappa},                {"delta", s.delta},
          {"case", s.case_label()},          {"lambda", weight_str(s.lambda)}};
}

S3 parse_point(const std::string& s) {
  auto v = parse_complexes(s);
  if (v.size() != 3) throw Error(ErrorCode::ParseError, "a point needs three complex entries: '" + s + "'");
  return {v[0], v[1], v[2]};
}

std::string point_str(const S3& s) {
  return "(" + format_complex(s[0]) + "," + format_complex(s[1]) + "," + format_complex(s[2]) + ")";
}

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

// ---- report assembly

struct Report {
  std::string command;
  json inputs = json::object();
  json values = json::object();
  std::vector<IdentityReport> checks;  // each becomes a case in "samples"
  std::vector<std::string> warnings;
  double err_est = 0.0;
  bool verification = false;  // pass decides the exit code
  bool pass = true;
};

void add_check(Report& r, const IdentityReport& c) {
  r.checks.push_back(c);
  r.verification = true;
  r.pass = r.pass && c.pass;
  r.err_est = std::max(r.err_est, c.err_est);
}

double max_rel(const Report& r) {
  double m = 0.0;
  for (const auto& c : r.checks) m = std::max(m, c.max_rel_err);
  return m;
}

json to_json(const Report& r, double runtime_ms) {
  json samples = json::array();
  json cases = json::array();
  for (const auto& c : r.checks) {
    cases.push_back({{"case", c.name}, {"samples", c.samples}, {"max_rel_err", c.max_rel_err},
                     {"tolerance", c.tolerance}, {"pass", c.pass}});
    int k = 0;
    for (const auto& row : c.rows)
      samples.push_back({{"case", c.name}, {"index", k++}, {"point", row.point}, {"lhs", cjson(row.lhs)},
                         {"rhs", cjson(row.rhs)}, {"rel_err", row.rel_err}, {"pass", row.rel_err <= c.tolerance}});
  }
  json values = r.values;
  if (!cases.empty()) values["cases"] = cases;
  json out = {{"schema_version", 1}, {"command", r.command}, {"inputs", r.inputs}, {"samples", samples},
              {"values", values},    {"err_est", r.err_est}, {"rel_err", max_rel(r)}, {"pass", r.pass},
              {"runtime_ms", runtime_ms}};
  if (!r.warnings.empty()) out["warnings"] = r.warnings;
  return out;
}

std::string csv_cell(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !(j.size() == 2 && j[0].is_number() && j[1].is_number())) {
    for (size_t k = 0; k < j.size(); ++k) flatten(j[k], prefix + "[" + std::to_string(k) + "]", out);
  } else if (j.is_string()) {
    out.push_back({prefix, j.get<std::string>()});
  } else if (j.is_array()) {
    out.push_back({prefix, format_complex(cplx(j[0].get<double>(), j[1].get<double>()), 15)});
  } else {
    out.push_back({prefix, j.dump()});
  }
}

void emit(const Report& r, const RunConfig& rc, double runtime_ms) {
  json j = to_json(r, runtime_ms);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  if (rc.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (rc.format == "csv") {
    if (!j["samples"].empty()) {
      std::cout << "case,index,point,lhs_re,lhs_im,rhs_re,rhs_im,rel_err,pass\n";
      for (const auto& s : j["samples"]) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.6e,%s", s["lhs"][0].get<double>(),
                      s["lhs"][1].get<double>(), s["rhs"][0].get<double>(), s["rhs"][1].get<double>(),
                      s["rel_err"].get<double>(), s["pass"].get<bool>() ? "true" : "false");
        std::cout << csv_cell(s["case"]) << "," << s["index"].get<int>() << "," << csv_cell(s["point"]) << "," << buf
                  << "\n";
      }
    } else {
      std::vector<std::pair<std::string, std::string>> kv;
      flatten(j["values"], "", kv);
      std::cout << "key,value\n";
      for (const auto& [k, v] : kv) std::cout << csv_cell(k) << "," << csv_cell(v) << "\n";
    }
  } else {
    std::vector<std::pair<std::string, std::string>> kv;
    flatten(r.values, "", kv);
    for (const auto& [k, v] : kv) std::cout << k << " = " << v << "\n";
    for (const auto& c : r.checks) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "[%s] %s  samples=%d max_rel_err=%.2e tol=%.0e", c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), c.samples, c.max_rel_err, c.tolerance);
      std::cout << buf << "\n";
      for (const auto& f : c.failures)
        std::cout << "    at " << f.point << ": lhs " << format_complex(f.lhs) << " rhs " << format_complex(f.rhs)
                  << "\n";
    }
    if (r.verification) std::cout << (r.pass ? "PASS" : "FAIL") << "\n";
  }
}

// ---- subcommands

struct GammaArgs {
  std::string kind = "G";
  std::vector<std::string> s;
  int n = 1;
};

Report cmd_gamma(const GammaArgs& a) {
  Report r;
  r.command = "gamma";
  r.inputs = {{"kind", a.kind}, {"s", a.s}};
  if (a.kind == "poch") r.inputs["n"] = a.n;
  json vals = json::array();
  for (const auto& txt : a.s) {
    cplx s = parse_complex(txt);
    cplx v;
    if (a.kind == "R") v = gamma_R(s);
    else if (a.kind == "C") v = gamma_C(s);
    else if (a.kind == "G") v = gamma(s);
    else if (a.kind == "poch") v = pochhammer(s, a.n);
    else throw Error(ErrorCode::ParseError, "--kind must be R, C, G or poch");
    vals.push_back({{"s", format_complex(s, 15)}, {"value", cjson(v)}, {"text", format_complex(v, 10)}});
  }
  r.values["results"] = vals;
  return r;
}

struct IdentArgs {
  std::string corpus;
  std::string suite = "all";
  std::string name;
  int samples = 3;
  double tol = -1.0;
};

Report cmd_identities(const IdentArgs& a, const RunConfig& rc) {
  Report r;
  r.command = "identities";
  std::string path = a.corpus.empty() ? default_corpus_path() : a.corpus;
  r.inputs = {{"suite", a.suite}, {"samples", a.samples}, {"tol", a.tol}, {"config", config_json(rc)}};
  if (a.suite == "all" || a.suite == "corpus") r.inputs["corpus"] = a.corpus.empty() ? "default" : a.corpus;
  if (!a.name.empty()) r.inputs["name"] = a.name;
  if (a.samples < 1) throw Error(ErrorCode::DomainViolation, "--samples must be positive");
  r.verification = true;
  std::mt19937_64 g(rc.seed);
  std::uniform_real_distribution<double> re(0.3, 2.0), im(-1.0, 1.0);
  auto rnd = [&](double shift = 0.0) { return cplx(re(g) + shift, im(g)); };
  if (a.suite == "all" || a.suite == "barnes") {
    double tol = a.tol > 0 ? a.tol : 1e-8;
    IdentityReport b1, b2;
    b1.name = "barnes_first";
    b2.name = "barnes_second";
    b1.tolerance = b2.tolerance = tol;
    for (int k = 0; k < a.samples; ++k) {
      cplx a1 = rnd(), a2 = rnd(), c1 = rnd(), c2 = rnd(), c3 = rnd();
      std::string pt = format_complex(a1, 6) + "," + format_complex(a2, 6) + ";" + format_complex(c1, 6) + "," +
                       format_complex(c2, 6);
      KernelValue l1 = eval_mb(barnes_first_integral(a1, a2, c1, c2), 1e-11);
      cplx r1 = barnes_first(a1, a2, c1, c2);
      b1.record(pt, l1.value, r1, rel_diff(l1.value, r1));
      b1.err_est = std::max(b1.err_est, l1.err_est);
      KernelValue l2 = eval_mb(barnes_second_integral(a1, a2, c1, c2, c3), 1e-11);
      cplx r2 = barnes_second(a1, a2, c1, c2, c3);
      b2.record(pt + "," + format_complex(c3, 6), l2.value, r2, rel_diff(l2.value, r2));
      b2.err_est = std::max(b2.err_est, l2.err_est);
    }
    add_check(r, b1);
    add_check(r, b2);
  }
  if (a.suite == "all" || a.suite == "saalschutz") {
    IdentityReport s;
    s.name = "saalschutz";
    s.tolerance = a.tol > 0 ? a.tol : 1e-10;
    for (int k = 0; k < a.samples; ++k) {
      int m = k % 6;
      IdentityReport one = saalschutz_check(rnd(), rnd(), rnd(2.0 * m), m, s.tolerance);
      one.name = s.name;
      s.merge(one);
    }
    add_check(r, s);
  }
  if (a.suite == "all" || a.suite == "corpus") {
    std::vector<Identity> ids = load_corpus(path);
    int used = 0;
    for (const Identity& id : ids) {
      if (!a.name.empty() && id.name != a.name) continue;
      ++used;
      add_check(r, verify_identity(id, a.samples, rc.seed, a.tol));
    }
    if (ids.empty()) r.warnings.push_back("corpus " + path + " contains no identities");
    else if (used == 0) r.warnings.push_back("no corpus identity named '" + a.name + "'");
  }
  if (a.suite != "all" && a.suite != "corpus" && a.suite != "barnes" && a.suite != "saalschutz")
    throw Error(ErrorCode::ParseError, "--suite must be all, corpus, barnes or saalschutz");
  return r;
}

struct RepArgs {
  std::string lambda;
  bool list = false;
};

Report cmd_rep(const RepArgs& a) {
  Report r;
  r.command = "rep";
  std::vector<int> v = parse_ints(a.lambda);
  if (v.size() != 3) throw Error(ErrorCode::ParseError, "--lambda needs three integers");
  HighestWeight w{v[0], v[1], v[2]};
  if (!valid_weight(w)) throw Error(ErrorCode::InvalidWeight, "weight " + weight_str(w) + " is not in Lambda_K");
  r.inputs = {{"lambda", weight_str(w)}};
  size_t n_s = S_count(w), n_c = S_circ_count(w), rank = relation_rank(w);
  size_t expect = w.l2 > 0 ? size_t(2 * (w.l1 - w.l2 + 1) * (w.l1 + w.l2 + 1)) : size_t((w.l1 + 1) * (w.l1 + 1));
  PropertyResult br = check_brackets(w), wt = check_weights(w);
  r.values = {{"dim", n_c},
              {"S_count", n_s},
              {"S_circ_count", n_c},
              {"relation_rank", rank},
              {"dimension_formula", expect},
              {"rank_consistent", rank + n_c == n_s},
              {"brackets", {{"pass", br.pass}, {"checked", br.checked}}},
              {"weights", {{"pass", wt.pass}, {"checked", wt.checked}}}};
  if (a.list) {
    json basis = json::array();
    for (const auto& l : basis_S_circ(w)) basis.push_back(index_str(l));
    r.values["basis"] = basis;
  }
  r.verification = true;
  r.pass = br.pass && wt.pass && rank + n_c == n_s && n_c == expect;
  if (!br.pass) r.warnings.push_back(br.detail);
  if (!wt.pass) r.warnings.push_back(wt.detail);
  return r;
}

struct KernelArgs {
  SigmaArgs sigma;
  std::string index = "0";
  std::vector<std::string> points;
  bool hat = false;
  std::string check = "none";
  double tol = -1.0;
};

Report cmd_kernel(const KernelArgs& a, const RunConfig& rc) {
  Report r;
  r.command = "kernel";
  InducingDatum sg = build_sigma(a.sigma);
  r.inputs = {{"sigma", sigma_json(sg)}, {"check", a.check}, {"hat", a.hat}, {"config", config_json(rc)}};
  std::vector<S3> pts;
  for (const auto& p : a.points) pts.push_back(parse_point(p));
  if (pts.empty()) pts = sample_points(1, rc.seed);
  json pjs = json::array();
  for (const auto& p : pts) pjs.push_back(point_str(p));
  r.inputs["points"] = pjs;
  double tol = a.tol;
  if (a.check == "special") {
    KernelId id{sg, special_value_index(sg)};
    r.inputs["index"] = index_str(id.l);
    IdentityReport c;
    c.name = "special_value " + sg.case_label();
    c.tolerance = tol > 0 ? tol : 1e-8;
    for (const S3& p : pts) {
      KernelValue v = kernel_hat(id, {p[0], p[1], p[0] + p[1]});
      cplx w = special_value_closed(sg, p[0], p[1]);
      c.record(point_str({p[0], p[1], p[0] + p[1]}), v.value, w, rel_diff(v.value, w));
      c.err_est = std::max(c.err_est, v.err_est);
    }
    add_check(r, c);
    return r;
  }
  std::vector<GenIndex> ls;
  if (a.index == "all") ls = enumerate_S(sg.lambda);
  else ls = {parse_index(a.index)};
  json idx = json::array();
  for (const auto& l : ls) idx.push_back(index_str(l));
  r.inputs["index"] = idx;
  json vals = json::array();
  IdentityReport c;
  c.name = a.check + " " + sg.case_label();
  c.tolerance = tol > 0 ? tol : 1e-8;
  for (const GenIndex& l : ls) {
    KernelId id = make_kernel_id(sg, l);
    for (const S3& p : pts) {
      KernelValue v = a.hat ? kernel_hat(id, p) : kernel_sigma_l(id, p);
      r.err_est = std::max(r.err_est, v.err_est);
      vals.push_back({{"index", index_str(l)}, {"point", point_str(p)}, {"value", cjson(v.value)}, {"err_est", v.err_est}});
      std::string where = index_str(l) + " @ " + point_str(p);
      if (a.check == "ds") {
        cplx lhs = kernel_hat(id, p).value, rhs = ds_shift_rhs(id, p).value;
        c.record(where, lhs, rhs, rel_diff(lhs, rhs));
      } else if (a.check == "contragredient") {
        cplx lhs = kernel_contragredient_direct(id, p).value, rhs = kernel_contragredient_reversal(id, p).value;
        c.record(where, lhs, rhs, rel_diff(lhs, rhs));
      } else if (a.check != "none") {
        throw Error(ErrorCode::ParseError, "--check must be none, ds, contragredient or special");
      }
    }
  }
  r.values["kernels"] = vals;
  if (a.check != "none") add_check(r, c);
  return r;
}

struct PdeArgs {
  SigmaArgs sigma;
  std::string equations = "all";
  int samples = 3;
  double tol = 1e-6;
  double gamma_shift = 0.0;
  bool literal_k1234 = false;
  bool reduce = false;
};

Report cmd_pde(const PdeArgs& a, const RunConfig& rc) {
  Report r;
  r.command = "pde";
  InducingDatum sg = build_sigma(a.sigma);
  if (a.samples < 1) throw Error(ErrorCode::DomainViolation, "--samples must be positive");
  r.inputs = {{"sigma", sigma_json(sg)},   {"equations", a.equations},     {"samples", a.samples},
              {"tol", a.tol},              {"gamma_shift", a.gamma_shift}, {"literal_k1234", a.literal_k1234},
              {"reduce_targets", a.reduce}, {"config", config_json(rc)}};
  PdeOptions opt;
  opt.tol = a.tol;
  opt.gamma_shift = {a.gamma_shift, a.gamma_shift, a.gamma_shift, a.gamma_shift};
  opt.nu_shift = a.gamma_shift;
  opt.literal_k1234 = a.literal_k1234;
  opt.reduce_targets = a.reduce;
  std::vector<S3> pts = sample_points(a.samples, rc.seed);
  bool cap = a.equations == "all" || a.equations == "capelli";
  bool ds = a.equations == "all" || a.equations == "ds";
  if (!cap && !ds) throw Error(ErrorCode::ParseError, "--equations must be all, capelli or ds");
  if (cap) {
    std::map<std::string, double> per;
    std::vector<MellinOperator> ops;
    for (const auto& l : enumerate_S(sg.lambda))
      for (auto& op : capelli_operators(sg, l, opt)) ops.push_back(op);
    IdentityReport c = check_operators("capelli " + sg.case_label(), sg, ops, pts, a.tol, &per);
    r.values["capelli_residuals"] = per;
    add_check(r, c);
  }
  if (ds) {
    bool any = sg.k1 > sg.k2 || sg.k2 >= 1;
    if (any) add_check(r, check_dirac_schmid(sg, "all", pts, opt));
    else r.warnings.push_back("no first-order equations apply to " + sg.case_label() + " with lambda " + weight_str(sg.lambda));
  }
  return r;
}

json gammas_json(const std::vector<GammaShift>& g) {
  json out = json::array();
  for (const auto& x : g) out.push_back({{"kind", x.kind == GammaKind::R ? "R" : "C"}, {"shift", format_complex(x.shift, 15)}});
  return out;
}

struct LArgs {
  SigmaArgs sigma;
  std::vector<std::string> s;
};

Report cmd_lfactor(const LArgs& a) {
  Report r;
  r.command = "lfactor";
  InducingDatum sg = build_sigma(a.sigma);
  r.inputs = {{"sigma", sigma_json(sg)}, {"s", a.s}};
  LFactorSet ls = lfactor_set(sg);
  WeilRep phi = langlands_parameter(sg), ext = exterior_square_parameter(sg);
  r.values = {{"langlands_parameter", weil_str(phi)},
              {"exterior_square_parameter", weil_str(ext)},
              {"standard", {{"symbolic", gammas_str(ls.std_gammas)}, {"gammas", gammas_json(ls.std_gammas)}, {"epsilon_power_of_i", ls.eps_std}}},
              {"exterior_square", {{"symbolic", gammas_str(ls.ext_gammas)}, {"gammas", gammas_json(ls.ext_gammas)}, {"epsilon_power_of_i", ls.eps_ext}}},
              {"b", sg.b}};
  json vals = json::array();
  for (const auto& txt : a.s) {
    cplx s = parse_complex(txt);
    cplx l1 = eval_gammas(ls.std_gammas, s), l2 = eval_gammas(ls.ext_gammas, s);
    vals.push_back({{"s", format_complex(s, 15)}, {"L_std", cjson(l1)}, {"L_ext", cjson(l2)}, {"L_std_text", format_complex(l1, 10)},
                    {"L_ext_text", format_complex(l2, 10)}});
  }
  r.values["numeric"] = vals;
  return r;
}

struct BFArgs {
  std::string tag;
  std::string nu, kappa, delta;
  int samples = 2;
  bool contragredient = false;
  bool both = false;
  double tol = 1e-6;
  double nu_perturbation = 0.0;
};

Report cmd_bf(const BFArgs& a, const RunConfig& rc) {
  Report r;
  r.command = "bf";
  const auto& tags = bf_case_tags();
  std::vector<std::string> run;
  if (a.tag == "all") run = tags;
  else if (std::find(tags.begin(), tags.end(), a.tag) != tags.end()) run = {a.tag};
  else throw Error(ErrorCode::UnsupportedCase, "unknown case tag '" + a.tag + "'");
  if (a.samples < 1) throw Error(ErrorCode::DomainViolation, "--samples must be positive");
  if (run.size() > 1 && (!a.nu.empty() || !a.kappa.empty() || !a.delta.empty()))
    throw Error(ErrorCode::DomainViolation, "sigma overrides need a single case tag");
  BFOptions opt;
  opt.seed = rc.seed;
  opt.tol = a.tol;
  opt.nu_perturbation = a.nu_perturbation;
  json cases = json::array();
  for (const auto& t : run) {
    BFCase c = default_bf_case(t);
    InducingDatum s = c.sigma;
    std::vector<cplx> nu = a.nu.empty() ? s.nu : parse_complexes(a.nu);
    std::vector<int> kappa = a.kappa.empty() ? s.kappa : parse_ints(a.kappa);
    std::vector<int> delta = a.delta.empty() ? s.delta : parse_ints(a.delta);
    c = make_bf_case(make_sigma(s.family, nu, kappa, delta), t);
    cases.push_back({{"tag", t}, {"sigma", sigma_json(c.sigma)}, {"b", c.b}});
    if (!a.contragredient || a.both) add_check(r, bf_verify(c, a.samples, opt));
    if (a.contragredient || a.both) add_check(r, bf_verify_contragredient(c, a.samples, opt));
  }
  r.inputs = {{"cases", cases},
              {"samples", a.samples},
              {"contragredient", a.contragredient},
              {"both", a.both},
              {"tol", a.tol},
              {"nu_perturbation", a.nu_perturbation},
              {"config", config_json(rc)}};
  return r;
}

struct WhitArgs {
  SigmaArgs sigma;
  std::string index = "0";
  std::vector<std::string> y;
  double step = 0.5, height = 8.0;
};

Report cmd_whittaker(const WhitArgs& a, const RunConfig& rc) {
  Report r;
  r.command = "whittaker";
  InducingDatum sg = build_sigma(a.sigma);
  KernelId id = make_kernel_id(sg, parse_index(a.index));
  WhittakerGridSpec spec;
  spec.step = a.step;
  spec.height = a.height;
  if (!(spec.step > 0 && spec.height > 0)) throw Error(ErrorCode::DomainViolation, "--step and --height must be positive");
  r.inputs = {{"sigma", sigma_json(sg)}, {"index", index_str(id.l)}, {"step", a.step}, {"height", a.height},
              {"y", a.y}, {"config", config_json(rc)}};
  WhittakerGrid grid(id, spec);
  json vals = json::array();
  for (const auto& txt : a.y) {
    std::vector<double> v;
    for (const auto& t : split(txt)) v.push_back(parse_double(t));
    if (v.size() != 4) throw Error(ErrorCode::ParseError, "--y needs four positive reals");
    KernelValue w = grid.value({v[0], v[1], v[2], v[3]});
    r.err_est = std::max(r.err_est, w.err_est);
    vals.push_back({{"y", txt}, {"value", cjson(w.value)}, {"err_est", w.err_est}});
  }
  r.values = {{"grid_samples", grid.samples()}, {"values", vals}};
  return r;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::NoConvergence:
    case ErrorCode::NaNEncountered:
    case ErrorCode::InconsistentRelations:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mellin-Barnes kernels, holonomic systems and zeta integrals on GL(4,R)"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig rc;
  std::string config_path, format;
  std::int64_t seed = -1;
  app.add_option("--config", config_path, "key=value quadrature/seed configuration file");
  app.add_option("--format", format, "json (default), csv or text");
  app.add_option("--seed", seed, "random seed for sample points");
  app.add_flag("--timing", rc.timing, "record wall time in runtime_ms (otherwise 0, for byte-identical reports)");

  GammaArgs ga;
  auto* g = app.add_subcommand("gamma", "evaluate Gamma, Gamma_R, Gamma_C or Pochhammer symbols");
  g->add_option("--kind", ga.kind, "R, C, G or poch")->check(CLI::IsMember({"R", "C", "G", "poch"}));
  g->add_option("--s", ga.s, "complex argument (repeatable)")->required();
  g->add_option("--n", ga.n, "Pochhammer length");

  IdentArgs ia;
  auto* id = app.add_subcommand("identities", "verify Barnes, Saalschutz and corpus identities");
  id->add_option("--corpus", ia.corpus, "identity corpus (JSON)");
  id->add_option("--suite", ia.suite, "all, corpus, barnes or saalschutz");
  id->add_option("--name", ia.name, "only this corpus identity");
  id->add_option("--samples", ia.samples, "random points per identity");
  id->add_option("--tol", ia.tol, "relative tolerance override");

  RepArgs ra;
  auto* rp = app.add_subcommand("rep", "enumerate generators and run the representation checks");
  rp->add_option("--lambda", ra.lambda, "highest weight, e.g. 2,1,0")->required();
  rp->add_flag("--list", ra.list, "list the basis indices");

  KernelArgs ka;
  auto* kn = app.add_subcommand("kernel", "evaluate Mellin-Barnes kernels");
  add_sigma_options(kn, ka.sigma);
  kn->add_option("--index", ka.index, "generator index (e.g. e1+2e34, ten integers, or 'all')");
  kn->add_option("--s", ka.points, "point s1,s2,s3 (repeatable)");
  kn->add_flag("--hat", ka.hat, "evaluate the shifted kernel V(s1,s2,s3+kappa2)");
  kn->add_option("--check", ka.check, "none, ds, contragredient or special");
  kn->add_option("--tol", ka.tol, "relative tolerance for --check");

  PdeArgs pa;
  auto* pd = app.add_subcommand("pde", "check the Capelli and first-order equations");
  add_sigma_options(pd, pa.sigma);
  pd->add_option("--equations", pa.equations, "all, capelli or ds");
  pd->add_option("--samples", pa.samples, "random points");
  pd->add_option("--tol", pa.tol, "relative residual tolerance");
  pd->add_option("--gamma-shift", pa.gamma_shift, "perturb the eigenvalues (negative control)");
  pd->add_flag("--literal-k1234", pa.literal_k1234, "use the unamended K_{12,34} entry");
  pd->add_flag("--reduce-targets", pa.reduce, "reduce operator targets to the basis first");

  LArgs la;
  auto* lf = app.add_subcommand("lfactor", "standard and exterior square L-factors");
  add_sigma_options(lf, la.sigma);
  lf->add_option("--s", la.s, "complex argument (repeatable)");

  BFArgs ba;
  auto* bf = app.add_subcommand("bf", "Bump-Friedberg zeta integral checks");
  bf->add_option("--case", ba.tag, "case tag (1a..1e, 2a..2f, 3a..3c) or 'all'")->required();
  bf->add_option("--nu", ba.nu, "override nu");
  bf->add_option("--kappa", ba.kappa, "override kappa");
  bf->add_option("--delta", ba.delta, "override delta");
  bf->add_option("--samples", ba.samples, "random points per case");
  bf->add_flag("--contragredient", ba.contragredient, "check the contragredient identity instead");
  bf->add_flag("--both", ba.both, "check both identities");
  bf->add_option("--tol", ba.tol, "relative tolerance");
  bf->add_option("--nu-perturbation", ba.nu_perturbation, "perturb nu_1 inside the kernel (negative control)");

  WhitArgs wa;
  auto* wh = app.add_subcommand("whittaker", "radial Whittaker values by triple contour summation (slow)");
  add_sigma_options(wh, wa.sigma);
  wh->add_option("--index", wa.index, "generator index");
  wh->add_option("--y", wa.y, "y1,y2,y3,y4 (repeatable)")->required();
  wh->add_option("--step", wa.step, "contour step");
  wh->add_option("--height", wa.height, "contour half-height");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!config_path.empty()) apply_config_file(rc, config_path);
    if (!format.empty()) rc.format = format;
    if (seed >= 0) rc.seed = std::uint64_t(seed);
    validate(rc);
    default_quad_config() = rc.quad;

    auto t0 = std::chrono::steady_clock::now();
    Report r;
    if (*g) r = cmd_gamma(ga);
    else if (*id) r = cmd_identities(ia, rc);
    else if (*rp) r = cmd_rep(ra);
    else if (*kn) r = cmd_kernel(ka, rc);
    else if (*pd) r = cmd_pde(pa, rc);
    else if (*lf) r = cmd_lfactor(la);
    else if (*bf) r = cmd_bf(ba, rc);
    else if (*wh) r = cmd_whittaker(wa, rc);
    double ms = rc.timing ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() : 0.0;
    emit(r, rc, ms);
    return r.verification && !r.pass ? 1 : 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
