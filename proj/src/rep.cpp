#include "gl4/rep.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

namespace gl4 {

namespace {

const char* kSlotNames[10] = {"e1", "e2", "e3", "e4", "e12", "e13", "e14", "e23", "e24", "e34"};

int sgn(int x) { return (x > 0) - (x < 0); }

void weak_compositions(int n, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= n; ++k) {
    cur.push_back(k);
    weak_compositions(n - k, parts - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int n, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (n >= 0) weak_compositions(n, parts, cur, out);
  return out;
}

// S_lambda for possibly invalid shapes: empty when a sum is negative.
std::vector<GenIndex> S_raw(int a, int b) {
  std::vector<GenIndex> out;
  if (a < 0 || b < 0) return out;
  for (const auto& x : compositions(a, 4))
    for (const auto& y : compositions(b, 6)) {
      GenIndex l{};
      for (int i = 0; i < 4; ++i) l[i] = x[i];
      for (int i = 0; i < 6; ++i) l[4 + i] = y[i];
      out.push_back(l);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool valid_weight(const HighestWeight& w) {
  return w.l1 >= w.l2 && w.l2 >= 0 && (w.l3 == 0 || w.l3 == 1) && w.l2 * w.l3 == 0;
}

std::string weight_str(const HighestWeight& w) {
  return "(" + std::to_string(w.l1) + "," + std::to_string(w.l2) + "," + std::to_string(w.l3) + ")";
}

int slot(int i) {
  if (i < 1 || i > 4) throw Error(ErrorCode::InvalidIndex, "generator slot e" + std::to_string(i));
  return i - 1;
}

int slot(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > 4 || i == j)
    throw Error(ErrorCode::InvalidIndex, "generator slot e" + std::to_string(i) + std::to_string(j));
  static const int tab[5][5] = {{0}, {0, -1, 4, 5, 6}, {0, 4, -1, 7, 8}, {0, 5, 7, -1, 9}, {0, 6, 8, 9, -1}};
  return tab[i][j];
}

GenIndex unit(int i) {
  GenIndex l{};
  l[slot(i)] = 1;
  return l;
}

GenIndex unit(int i, int j) {
  GenIndex l{};
  l[slot(i, j)] = 1;
  return l;
}

GenIndex operator+(const GenIndex& a, const GenIndex& b) {
  GenIndex r;
  for (int k = 0; k < 10; ++k) r[k] = a[k] + b[k];
  return r;
}

GenIndex operator-(const GenIndex& a, const GenIndex& b) {
  GenIndex r;
  for (int k = 0; k < 10; ++k) r[k] = a[k] - b[k];
  return r;
}

GenIndex operator*(int k, const GenIndex& a) {
  GenIndex r;
  for (int i = 0; i < 10; ++i) r[i] = k * a[i];
  return r;
}

bool nonnegative(const GenIndex& l) {
  return std::all_of(l.begin(), l.end(), [](int x) { return x >= 0; });
}

bool in_S(const HighestWeight& w, const GenIndex& l) {
  return nonnegative(l) && l[0] + l[1] + l[2] + l[3] == w.l1 - w.l2 &&
         l[4] + l[5] + l[6] + l[7] + l[8] + l[9] == w.l2;
}

std::string index_str(const GenIndex& l) {
  std::string s;
  for (int k = 0; k < 10; ++k) {
    if (l[k] == 0) continue;
    if (!s.empty()) s += "+";
    if (l[k] != 1) s += std::to_string(l[k]);
    s += kSlotNames[k];
  }
  return s.empty() ? "0" : s;
}

GenIndex parse_index(const std::string& text) {
  GenIndex l{};
  std::string t;
  for (char c : text)
    if (!std::isspace((unsigned char)c)) t += c;
  if (t.empty()) throw Error(ErrorCode::ParseError, "empty generator index");
  if (t.find(',') != std::string::npos) {
    std::stringstream ss(t);
    std::string item;
    int k = 0;
    while (std::getline(ss, item, ',')) {
      if (k >= 10) throw Error(ErrorCode::ParseError, "generator index has more than 10 entries");
      try {
        l[k++] = std::stoi(item);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad generator index entry '" + item + "'");
      }
    }
    if (k != 10) throw Error(ErrorCode::ParseError, "generator index needs 10 entries");
    return l;
  }
  if (t == "0") return l;
  size_t p = 0;
  while (p < t.size()) {
    int sign = 1;
    if (t[p] == '+' || t[p] == '-') sign = t[p++] == '-' ? -1 : 1;
    int coef = 1;
    size_t st = p;
    while (p < t.size() && std::isdigit((unsigned char)t[p])) ++p;
    if (p > st) coef = std::stoi(t.substr(st, p - st));
    if (p >= t.size() || t[p] != 'e') throw Error(ErrorCode::ParseError, "expected 'e' in generator index '" + text + "'");
    ++p;
    st = p;
    while (p < t.size() && std::isdigit((unsigned char)t[p])) ++p;
    std::string digits = t.substr(st, p - st);
    if (digits.size() == 1)
      l[slot(digits[0] - '0')] += sign * coef;
    else if (digits.size() == 2)
      l[slot(digits[0] - '0', digits[1] - '0')] += sign * coef;
    else
      throw Error(ErrorCode::ParseError, "bad generator name in '" + text + "'");
  }
  return l;
}

void add_to(Combo& c, const GenIndex& l, const mpq_class& coef) {
  if (coef == 0) return;
  auto it = c.find(l);
  if (it == c.end()) {
    c.emplace(l, coef);
    return;
  }
  it->second += coef;
  if (it->second == 0) c.erase(it);
}

Combo combo_add(const Combo& a, const Combo& b, const mpq_class& scale) {
  Combo r = a;
  for (const auto& [l, c] : b) add_to(r, l, scale * c);
  return r;
}

std::string combo_str(const Combo& c) {
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [l, q] : c) {
    std::string qs = q.get_str();
    if (!s.empty() && qs[0] != '-') s += " + ";
    else if (!s.empty()) s += " ";
    s += qs + "*u[" + index_str(l) + "]";
  }
  return s;
}

std::vector<GenIndex> enumerate_S(const HighestWeight& w) {
  if (!valid_weight(w)) throw Error(ErrorCode::InvalidWeight, "weight " + weight_str(w) + " is not in Lambda_K");
  return S_raw(w.l1 - w.l2, w.l2);
}

size_t S_count(const HighestWeight& w) {
  auto c = [](long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  return size_t(c(w.l1 - w.l2 + 3, 3) * c(w.l2 + 5, 5));
}

bool in_S_circ(const HighestWeight& w, const GenIndex& l) {
  if (!in_S(w, l)) return false;
  int l3 = l[2], l4 = l[3], l12 = l[4], l14 = l[6], l23 = l[7], l24 = l[8], l34 = l[9];
  if (w.l2 == 0) return l4 <= 1;
  return (l3 > 0 && l4 == 0 && l12 == 0 && l34 == 0 && l14 + l23 + l24 <= 1) ||
         (l3 == 0 && l4 == 0 && l24 == 0 && l12 > 0 && l14 + l23 + l34 <= 1) ||
         (l3 == 0 && l4 == 0 && l12 == 0 && l14 + l23 + l24 + l34 <= 1);
}

std::vector<GenIndex> basis_S_circ(const HighestWeight& w) {
  std::vector<GenIndex> out;
  for (const auto& l : enumerate_S(w))
    if (in_S_circ(w, l)) out.push_back(l);
  return out;
}

size_t S_circ_count(const HighestWeight& w) {
  if (w.l2 > 0) return size_t(2 * (w.l1 - w.l2 + 1) * (w.l1 + w.l2 + 1));
  return size_t((w.l1 + 1) * (w.l1 + 1));
}

std::vector<Combo> relation_rows(const HighestWeight& w) {
  if (!valid_weight(w)) throw Error(ErrorCode::InvalidWeight, "weight " + weight_str(w) + " is not in Lambda_K");
  std::vector<Combo> rows;
  auto push = [&](Combo c) {
    if (!c.empty()) rows.push_back(std::move(c));
  };
  if (w.l1 - w.l2 >= 2)
    for (const auto& l : S_raw(w.l1 - w.l2 - 2, w.l2)) {
      Combo c;
      for (int i = 1; i <= 4; ++i) add_to(c, l + 2 * unit(i), 1);
      push(c);
    }
  if (w.l1 > w.l2 && w.l2 > 0)
    for (const auto& l : S_raw(w.l1 - w.l2 - 1, w.l2 - 1)) {
      for (int i = 1; i <= 4; ++i) {
        Combo c;
        for (int j = 1; j <= 4; ++j)
          if (j != i) add_to(c, l + unit(j) + unit(i, j), sgn(j - i));
        push(c);
      }
      for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
          for (int k = j + 1; k <= 4; ++k) {
            Combo c;
            add_to(c, l + unit(i) + unit(j, k), 1);
            add_to(c, l + unit(j) + unit(i, k), -1);
            add_to(c, l + unit(k) + unit(i, j), 1);
            push(c);
          }
    }
  if (w.l2 >= 2)
    for (const auto& l : S_raw(w.l1 - w.l2, w.l2 - 2)) {
      for (int i = 1; i <= 4; ++i)
        for (int j = i; j <= 4; ++j) {
          Combo c;
          for (int k = 1; k <= 4; ++k)
            if (k != i && k != j) add_to(c, l + unit(i, k) + unit(j, k), sgn((k - i) * (k - j)));
          push(c);
        }
      Combo c;
      add_to(c, l + unit(1, 2) + unit(3, 4), 1);
      add_to(c, l + unit(1, 3) + unit(2, 4), -1);
      add_to(c, l + unit(1, 4) + unit(2, 3), 1);
      push(c);
    }
  return rows;
}

RelationModule::RelationModule(const HighestWeight& w) : w_(w) {
  for (auto& r : relation_rows(w)) {
    ++nrows_;
    insert(std::move(r));
  }
}

Combo RelationModule::reduce(const Combo& v) const {
  Combo out;
  for (const auto& [l, c] : v) {
    auto it = pivots_.find(l);
    if (it == pivots_.end()) {
      add_to(out, l, c);
      continue;
    }
    for (const auto& [m, d] : it->second)
      if (m != l) add_to(out, m, -c * d);
  }
  return out;
}

void RelationModule::insert(Combo row) {
  row = reduce(row);
  if (row.empty()) return;
  // Lexicographically first non-basis column; basis columns only as a fallback.
  auto pick = row.end();
  for (auto it = row.begin(); it != row.end(); ++it)
    if (!in_S_circ(w_, it->first)) {
      pick = it;
      break;
    }
  if (pick == row.end()) {
    consistent_ = false;
    pick = row.begin();
  }
  GenIndex p = pick->first;
  mpq_class inv = 1 / pick->second;
  for (auto& [l, c] : row) c *= inv;
  for (auto& [q, r] : pivots_) {
    auto it = r.find(p);
    if (it == r.end()) continue;
    mpq_class f = it->second;
    for (const auto& [l, c] : row) add_to(r, l, -f * c);
  }
  pivots_.emplace(p, std::move(row));
}

std::shared_ptr<const RelationModule> relation_module(const HighestWeight& w) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const RelationModule>> memo;
  if (!valid_weight(w)) throw Error(ErrorCode::InvalidWeight, "weight " + weight_str(w) + " is not in Lambda_K");
  std::pair<int, int> key{w.l1 - w.l2, w.l2};
  {
    std::lock_guard<std::mutex> g(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  auto m = std::make_shared<const RelationModule>(HighestWeight{w.l1, w.l2, 0});
  std::lock_guard<std::mutex> g(mu);
  return memo.emplace(key, m).first->second;
}

Combo reduce_to_basis(const HighestWeight& w, const Combo& v) {
  for (const auto& [l, c] : v)
    if (!in_S(w, l)) throw Error(ErrorCode::InvalidIndex, index_str(l) + " is not in S" + weight_str(w));
  auto m = relation_module(w);
  if (!m->consistent())
    throw Error(ErrorCode::InconsistentRelations, "relations of " + weight_str(w) + " are not compatible with the basis");
  return m->reduce(v);
}

size_t relation_rank(const HighestWeight& w) { return relation_module(w)->rank(); }

int torus_sign(const HighestWeight& w, const std::array<int, 4>& eps, const GenIndex& l) {
  int e[4] = {l[0] + l[4] + l[5] + l[6], l[1] + l[4] + l[7] + l[8], l[2] + l[5] + l[7] + l[9],
              l[3] + l[6] + l[8] + l[9]};
  int s = 1;
  for (int i = 0; i < 4; ++i) {
    if (eps[i] != 1 && eps[i] != -1) throw Error(ErrorCode::DomainViolation, "torus element entries must be +-1");
    if (eps[i] == -1 && (e[i] + w.l3) % 2 != 0) s = -s;
  }
  return s;
}

Combo act_torus(const HighestWeight& w, const std::array<int, 4>& eps, const GenIndex& l) {
  Combo c;
  add_to(c, l, torus_sign(w, eps, l));
  return c;
}

Combo act_so4_raw(int i, int j, const GenIndex& l) {
  if (i == j) return {};
  if (i > j) {
    Combo c = act_so4_raw(j, i, l);
    for (auto& [k, q] : c) q = -q;
    return c;
  }
  Combo c;
  auto term = [&](int mult, const GenIndex& t, int sign) {
    if (mult == 0) return;
    GenIndex m = t;
    if (nonnegative(m)) add_to(c, m, sign * mult);
  };
  term(l[slot(j)], l - unit(j) + unit(i), 1);
  term(l[slot(i)], l - unit(i) + unit(j), -1);
  for (int k = 1; k <= 4; ++k) {
    if (k == i || k == j) continue;
    int s = sgn((k - i) * (k - j));
    term(l[slot(k, j)], l - unit(k, j) + unit(k, i), s);
    term(l[slot(k, i)], l - unit(k, i) + unit(k, j), -s);
  }
  return c;
}

Combo act_so4_raw(int i, int j, const Combo& v) {
  Combo out;
  for (const auto& [l, c] : v)
    for (const auto& [m, d] : act_so4_raw(i, j, l)) add_to(out, m, c * d);
  return out;
}

Combo act_so4(const HighestWeight& w, int i, int j, const GenIndex& l) {
  if (!in_S(w, l)) throw Error(ErrorCode::InvalidIndex, index_str(l) + " is not in S" + weight_str(w));
  return reduce_to_basis(w, act_so4_raw(i, j, l));
}

PropertyResult check_brackets(const HighestWeight& w) {
  PropertyResult r;
  auto basis = basis_S_circ(w);
  auto d = [](int a, int b) { return a == b ? 1 : 0; };
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c)
        for (int e = c + 1; e <= 4; ++e) {
          if (a * 5 + b >= c * 5 + e) continue;
          for (const auto& l : basis) {
            Combo u;
            add_to(u, l, 1);
            Combo lhs = combo_add(act_so4_raw(a, b, act_so4_raw(c, e, u)), act_so4_raw(c, e, act_so4_raw(a, b, u)), -1);
            Combo rhs;
            if (d(b, c)) rhs = combo_add(rhs, act_so4_raw(a, e, u));
            if (d(a, e)) rhs = combo_add(rhs, act_so4_raw(c, b, u), -1);
            if (d(b, e)) rhs = combo_add(rhs, act_so4_raw(c, a, u));
            if (d(a, c)) rhs = combo_add(rhs, act_so4_raw(b, e, u), -1);
            Combo diff = reduce_to_basis(w, combo_add(lhs, rhs, -1));
            ++r.checked;
            if (!diff.empty() && r.pass) {
              r.pass = false;
              r.detail = "[E" + std::to_string(a) + std::to_string(b) + ",E" + std::to_string(c) + std::to_string(e) +
                         "] on u[" + index_str(l) + "] leaves " + combo_str(diff);
            }
          }
        }
  return r;
}

namespace {

// Gaussian-rational polynomial in the ten generators.
struct GQ {
  mpq_class re, im;
};
using GPoly = std::map<GenIndex, GQ>;

GPoly gmul(const GPoly& a, const GPoly& b) {
  GPoly r;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) {
      auto& t = r[la + lb];
      t.re += ca.re * cb.re - ca.im * cb.im;
      t.im += ca.re * cb.im + ca.im * cb.re;
    }
  for (auto it = r.begin(); it != r.end();)
    it = (it->second.re == 0 && it->second.im == 0) ? r.erase(it) : std::next(it);
  return r;
}

// zeta_1 = xi_1 - i xi_2, zeta_2 = xi_1 + i xi_2, zeta_3 = xi_3 - i xi_4, zeta_4 = xi_3 + i xi_4
std::array<GQ, 4> zeta_coeffs(int a) {
  std::array<GQ, 4> c{};
  int base = a <= 2 ? 0 : 2;
  c[base].re = 1;
  c[base + 1].im = (a % 2 == 1) ? -1 : 1;
  return c;
}

GPoly zeta_linear(int a) {
  GPoly p;
  auto c = zeta_coeffs(a);
  for (int k = 0; k < 4; ++k)
    if (c[k].re != 0 || c[k].im != 0) p[unit(k + 1)] = c[k];
  return p;
}

GPoly zeta_wedge(int a, int b) {
  auto x = zeta_coeffs(a), y = zeta_coeffs(b);
  GPoly p;
  for (int s = 0; s < 4; ++s)
    for (int t = s + 1; t < 4; ++t) {
      GQ v;
      v.re = x[s].re * y[t].re - x[s].im * y[t].im - (x[t].re * y[s].re - x[t].im * y[s].im);
      v.im = x[s].re * y[t].im + x[s].im * y[t].re - (x[t].re * y[s].im + x[t].im * y[s].re);
      if (v.re != 0 || v.im != 0) p[unit(s + 1, t + 1)] = v;
    }
  return p;
}

}  // namespace

PropertyResult check_weights(const HighestWeight& w) {
  PropertyResult r;
  static const int pairs[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  for (const auto& l : enumerate_S(w)) {
    GPoly v;
    v[GenIndex{}] = GQ{1, 0};
    for (int k = 0; k < 4; ++k)
      for (int n = 0; n < l[k]; ++n) v = gmul(v, zeta_linear(k + 1));
    for (int k = 0; k < 6; ++k)
      for (int n = 0; n < l[4 + k]; ++n) v = gmul(v, zeta_wedge(pairs[k][0], pairs[k][1]));
    Combo vre, vim;
    for (const auto& [m, c] : v) {
      add_to(vre, m, c.re);
      add_to(vim, m, c.im);
    }
    int ev[2] = {l[1] + l[8] + l[7] - l[0] - l[5] - l[6], l[3] + l[8] + l[6] - l[2] - l[5] - l[7]};
    int ops[2][2] = {{1, 2}, {3, 4}};
    for (int o = 0; o < 2; ++o) {
      // E v = i c v  <=>  E re = -c im,  E im = c re
      Combo d1 = combo_add(act_so4_raw(ops[o][0], ops[o][1], vre), vim, ev[o]);
      Combo d2 = combo_add(act_so4_raw(ops[o][0], ops[o][1], vim), vre, -ev[o]);
      ++r.checked;
      if ((!reduce_to_basis(w, d1).empty() || !reduce_to_basis(w, d2).empty()) && r.pass) {
        r.pass = false;
        r.detail = "E" + std::to_string(ops[o][0]) + std::to_string(ops[o][1]) + " on v[" + index_str(l) +
                   "] is not sqrt(-1)*" + std::to_string(ev[o]);
      }
    }
  }
  return r;
}

}  // namespace gl4
