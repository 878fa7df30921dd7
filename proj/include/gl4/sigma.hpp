#pragma once

#include <array>
#include <string>
#include <vector>

#include "gl4/error.hpp"
#include "gl4/rep.hpp"

namespace gl4 {

enum class Family { P1111, P211, P22 };

std::string family_name(Family f);
Family parse_family(const std::string& s);

// Inducing datum plus the derived quantities of the case table.
struct InducingDatum {
  Family family = Family::P1111;
  std::vector<cplx> nu;     // 4 / 3 / 2 entries
  std::vector<int> kappa;   // D-type weights: 0 / 1 / 2 entries, each >= 2
  std::vector<int> delta;   // 4 / 2 / 0 entries

  // derived
  int k1 = 0, k2 = 0;       // kappa_1, kappa_2 of the unified notation
  int d1 = 0, d2 = 0, d3 = 0;  // delta_1, delta_2, delta_3 of the unified notation
  int subcase = 1;          // 1..4 for case 1-(i..iv), 1..2 for case 2-(i,ii), 1 for case 3
  HighestWeight lambda;
  std::array<cplx, 4> roots{};  // gamma_i = e_i(roots)
  std::array<cplx, 4> gamma{};
  cplx nu1p = 0.0;
  int b = 0;

  int case_number() const { return family == Family::P1111 ? 1 : family == Family::P211 ? 2 : 3; }
  std::string case_label() const;
  std::string str() const;
};

// Validates and fills the derived fields.
InducingDatum make_sigma(Family f, std::vector<cplx> nu, std::vector<int> kappa, std::vector<int> delta);

HighestWeight minimal_k_type(const InducingDatum& s);
std::array<cplx, 4> capelli_eigenvalues(const InducingDatum& s);
std::array<cplx, 4> elementary_symmetric(const std::array<cplx, 4>& a);
int b_parity(const InducingDatum& s);
bool omega0_guard(const InducingDatum& s, double tol = 1e-9);

// nu -> -nu
InducingDatum contragredient(const InducingDatum& s);
// nu -> nu + c (1, ..., 1)
InducingDatum twist(const InducingDatum& s, cplx c);

}  // namespace gl4
