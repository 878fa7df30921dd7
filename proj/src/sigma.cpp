#include "gl4/sigma.hpp"

#include <cmath>
#include <sstream>

namespace gl4 {

std::string family_name(Family f) {
  switch (f) {
    case Family::P1111:
      return "P1111";
    case Family::P211:
      return "P211";
    case Family::P22:
      return "P22";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "P1111" || s == "1111" || s == "1") return Family::P1111;
  if (s == "P211" || s == "211" || s == "2") return Family::P211;
  if (s == "P22" || s == "22" || s == "3") return Family::P22;
  throw Error(ErrorCode::ParseError, "unknown family '" + s + "' (expected P1111, P211 or P22)");
}

std::string InducingDatum::case_label() const {
  static const char* roman[] = {"", "i", "ii", "iii", "iv"};
  if (family == Family::P22) return "3";
  return std::to_string(case_number()) + "-(" + roman[subcase] + ")";
}

std::string InducingDatum::str() const {
  std::ostringstream os;
  os << family_name(family) << " nu=(";
  for (size_t i = 0; i < nu.size(); ++i) os << (i ? "," : "") << format_complex(nu[i], 6);
  os << ")";
  if (!kappa.empty()) {
    os << " kappa=(";
    for (size_t i = 0; i < kappa.size(); ++i) os << (i ? "," : "") << kappa[i];
    os << ")";
  }
  if (!delta.empty()) {
    os << " delta=(";
    for (size_t i = 0; i < delta.size(); ++i) os << (i ? "," : "") << delta[i];
    os << ")";
  }
  return os.str();
}

std::array<cplx, 4> elementary_symmetric(const std::array<cplx, 4>& a) {
  std::array<cplx, 5> e{1.0, 0.0, 0.0, 0.0, 0.0};
  for (cplx x : a)
    for (int k = 4; k >= 1; --k) e[k] += x * e[k - 1];
  return {e[1], e[2], e[3], e[4]};
}

InducingDatum make_sigma(Family f, std::vector<cplx> nu, std::vector<int> kappa, std::vector<int> delta) {
  InducingDatum s;
  s.family = f;
  s.nu = std::move(nu);
  s.kappa = std::move(kappa);
  s.delta = std::move(delta);
  auto need = [](bool ok, const std::string& msg) {
    if (!ok) throw Error(ErrorCode::DomainViolation, msg);
  };
  for (int d : s.delta) need(d == 0 || d == 1, "delta entries must be 0 or 1");
  for (int k : s.kappa) need(k >= 2, "D-type weights kappa must be >= 2");
  switch (f) {
    case Family::P1111: {
      need(s.nu.size() == 4 && s.kappa.empty() && s.delta.size() == 4, "P1111 needs 4 nu, 4 delta, no kappa");
      const auto& d = s.delta;
      need(d[0] >= d[1] && d[1] >= d[2] && d[2] >= d[3], "P1111 needs delta_1 >= delta_2 >= delta_3 >= delta_4");
      s.k1 = d[0] - d[3];
      s.k2 = d[1] - d[2];
      s.d1 = d[0];
      s.d2 = d[1];
      s.d3 = d[2];
      int sum = d[0] + d[1] + d[2] + d[3];
      s.subcase = (sum == 0 || sum == 4) ? 1 : sum + 1;  // (1,0,0,0) -> ii, (1,1,0,0) -> iii, (1,1,1,0) -> iv
      s.nu1p = s.subcase == 4 ? s.nu[3] : s.nu[0];
      s.roots = {s.nu[0], s.nu[1], s.nu[2], s.nu[3]};
      s.b = sum % 2;
      break;
    }
    case Family::P211: {
      need(s.nu.size() == 3 && s.kappa.size() == 1 && s.delta.size() == 2, "P211 needs 3 nu, 1 kappa, 2 delta");
      need(s.delta[0] >= s.delta[1], "P211 needs delta_2 >= delta_3");
      s.k1 = s.kappa[0];
      s.k2 = s.delta[0] - s.delta[1];
      s.d1 = s.k1 % 2;
      s.d2 = s.delta[0];
      s.d3 = s.delta[1];
      s.subcase = s.k2 == 1 ? 2 : 1;
      s.nu1p = s.nu[0];
      cplx h = 0.5 * (s.k1 - 1);
      s.roots = {s.nu[0] + h, s.nu[0] - h, s.nu[1], s.nu[2]};
      s.b = (s.d1 + s.d2 + s.d3) % 2;
      break;
    }
    case Family::P22: {
      need(s.nu.size() == 2 && s.kappa.size() == 2 && s.delta.empty(), "P22 needs 2 nu, 2 kappa, no delta");
      need(s.kappa[0] >= s.kappa[1], "P22 needs kappa_1 >= kappa_2");
      s.k1 = s.kappa[0];
      s.k2 = s.kappa[1];
      s.d1 = s.k1 % 2;
      s.d2 = s.k2 % 2;
      s.d3 = 0;
      s.subcase = 1;
      s.nu1p = s.nu[0];
      cplx h1 = 0.5 * (s.k1 - 1), h2 = 0.5 * (s.k2 - 1);
      s.roots = {s.nu[0] + h1, s.nu[0] - h1, s.nu[1] + h2, s.nu[1] - h2};
      s.b = (s.k1 + s.k2) % 2;
      break;
    }
  }
  s.lambda = {s.k1, s.k2, s.d3};
  s.gamma = elementary_symmetric(s.roots);
  for (cplx z : s.nu) need(std::isfinite(z.real()) && std::isfinite(z.imag()), "nu must be finite");
  return s;
}

HighestWeight minimal_k_type(const InducingDatum& s) { return s.lambda; }
std::array<cplx, 4> capelli_eigenvalues(const InducingDatum& s) { return s.gamma; }
int b_parity(const InducingDatum& s) { return s.b; }

bool omega0_guard(const InducingDatum& s, double tol) {
  auto half_int = [tol](cplx z) {
    return std::abs(z.imag()) <= tol && std::abs(2 * z.real() - std::round(2 * z.real())) <= 2 * tol;
  };
  for (size_t i = 0; i < s.nu.size(); ++i)
    for (size_t j = i + 1; j < s.nu.size(); ++j)
      if (half_int(s.nu[i] - s.nu[j])) return false;
  if (s.family == Family::P1111 && std::abs(s.nu[0] + s.nu[1] - s.nu[2] - s.nu[3]) <= tol) return false;
  return true;
}

InducingDatum contragredient(const InducingDatum& s) {
  std::vector<cplx> nu;
  for (cplx z : s.nu) nu.push_back(-z);
  return make_sigma(s.family, nu, s.kappa, s.delta);
}

InducingDatum twist(const InducingDatum& s, cplx c) {
  std::vector<cplx> nu;
  for (cplx z : s.nu) nu.push_back(z + c);
  return make_sigma(s.family, nu, s.kappa, s.delta);
}

}  // namespace gl4
