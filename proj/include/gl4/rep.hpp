#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gl4/error.hpp"

namespace gl4 {

struct HighestWeight {
  int l1 = 0, l2 = 0, l3 = 0;
  bool operator==(const HighestWeight&) const = default;
  auto operator<=>(const HighestWeight&) const = default;
};

bool valid_weight(const HighestWeight& w);
std::string weight_str(const HighestWeight& w);

// l = (l1, l2, l3, l4, l12, l13, l14, l23, l24, l34)
using GenIndex = std::array<int, 10>;

// Slot of e_i (1-based) and e_ij (i != j, unordered).
int slot(int i);
int slot(int i, int j);
GenIndex unit(int i);
GenIndex unit(int i, int j);
GenIndex operator+(const GenIndex& a, const GenIndex& b);
GenIndex operator-(const GenIndex& a, const GenIndex& b);
GenIndex operator*(int k, const GenIndex& a);
bool nonnegative(const GenIndex& l);
bool in_S(const HighestWeight& w, const GenIndex& l);
std::string index_str(const GenIndex& l);
// Parses "e4+2e12-e3", "0", or ten comma-separated integers.
GenIndex parse_index(const std::string& text);

using Combo = std::map<GenIndex, mpq_class>;

void add_to(Combo& c, const GenIndex& l, const mpq_class& coef);
Combo combo_add(const Combo& a, const Combo& b, const mpq_class& scale = 1);
std::string combo_str(const Combo& c);

std::vector<GenIndex> enumerate_S(const HighestWeight& w);
size_t S_count(const HighestWeight& w);
bool in_S_circ(const HighestWeight& w, const GenIndex& l);
std::vector<GenIndex> basis_S_circ(const HighestWeight& w);
size_t S_circ_count(const HighestWeight& w);

// All relations of the generator presentation, one combo per instantiated row.
std::vector<Combo> relation_rows(const HighestWeight& w);

// Reduced row echelon form of the relation rows, pivots on non-basis columns.
class RelationModule {
 public:
  explicit RelationModule(const HighestWeight& w);
  const HighestWeight& weight() const { return w_; }
  size_t rank() const { return pivots_.size(); }
  size_t num_rows() const { return nrows_; }
  // False when some relation survives on basis columns only.
  bool consistent() const { return consistent_; }
  Combo reduce(const Combo& v) const;

 private:
  void insert(Combo row);
  HighestWeight w_;
  std::map<GenIndex, Combo> pivots_;  // pivot -> row with coefficient 1 at pivot, no other pivot present
  size_t nrows_ = 0;
  bool consistent_ = true;
};

// Shared per-weight module (thread-safe memo).
std::shared_ptr<const RelationModule> relation_module(const HighestWeight& w);

Combo reduce_to_basis(const HighestWeight& w, const Combo& v);

size_t relation_rank(const HighestWeight& w);

// tau(diag(eps)) u_l = sign * u_l
int torus_sign(const HighestWeight& w, const std::array<int, 4>& eps, const GenIndex& l);
Combo act_torus(const HighestWeight& w, const std::array<int, 4>& eps, const GenIndex& l);

// tau(E_ij) u_l for any i != j (E_ji = -E_ij), unreduced combination over S_lambda.
Combo act_so4_raw(int i, int j, const GenIndex& l);
Combo act_so4_raw(int i, int j, const Combo& v);
Combo act_so4(const HighestWeight& w, int i, int j, const GenIndex& l);

struct PropertyResult {
  bool pass = true;
  size_t checked = 0;
  std::string detail;
};

// [E_ab, E_cd] = d_bc E_ad - d_ad E_cb + d_bd E_ca - d_ac E_bd on every basis vector.
PropertyResult check_brackets(const HighestWeight& w);
// E_12, E_34 diagonal on the v_l generators with eigenvalues in sqrt(-1) Z.
PropertyResult check_weights(const HighestWeight& w);

}  // namespace gl4
