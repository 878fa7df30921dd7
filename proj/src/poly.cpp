#include "gl4/poly.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace gl4 {

Poly::Poly(cplx c) {
  if (c != cplx(0.0)) terms_[{}] = c;
}

Poly Poly::var(const std::string& name) {
  Poly p;
  p.terms_[{{name, 1}}] = 1.0;
  return p;
}

void Poly::add_term(const Monomial& m, cplx c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != cplx(0.0)) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == cplx(0.0)) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1;
      for (const auto& [v, e] : m2) m[v] += e;
      r.add_term(m, c1 * c2);
    }
  return r;
}

Poly Poly::pow(int n) const {
  if (n < 0) throw Error(ErrorCode::ParseError, "negative power of a polynomial");
  Poly r(1.0);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

cplx Poly::eval(const Point& pt) const {
  cplx s = 0.0;
  for (const auto& [m, c] : terms_) {
    cplx t = c;
    for (const auto& [v, e] : m) {
      auto it = pt.find(v);
      if (it == pt.end()) throw Error(ErrorCode::DomainViolation, "unbound variable '" + v + "'");
      for (int k = 0; k < e; ++k) t *= it->second;
    }
    s += t;
  }
  return s;
}

Poly Poly::partial(const Point& pt) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    cplx t = c;
    Monomial rest;
    for (const auto& [v, e] : m) {
      auto it = pt.find(v);
      if (it == pt.end()) {
        rest[v] = e;
      } else {
        for (int k = 0; k < e; ++k) t *= it->second;
      }
    }
    r.add_term(rest, t);
  }
  return r;
}

Poly Poly::shifted(const std::map<std::string, int>& d) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Poly t(c);
    for (const auto& [v, e] : m) {
      auto it = d.find(v);
      Poly base = var(v);
      if (it != d.end()) base = base + Poly(double(it->second));
      t = t * base.pow(e);
    }
    r = r + t;
  }
  return r;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

cplx Poly::constant() const {
  auto it = terms_.find({});
  return it == terms_.end() ? cplx(0.0) : it->second;
}

int Poly::degree_in(const std::string& v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(v);
    if (it != m.end()) d = std::max(d, it->second);
  }
  return d;
}

cplx Poly::linear_coeff(const std::string& v) const {
  cplx a = 0.0;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(v);
    if (it == m.end()) continue;
    if (it->second != 1 || m.size() != 1)
      throw Error(ErrorCode::DomainViolation, "argument is not affine in '" + v + "': " + str());
    a += c;
  }
  return a;
}

Poly Poly::without(const std::string& v) const {
  Poly r;
  for (const auto& [m, c] : terms_)
    if (m.find(v) == m.end()) r.terms_[m] = c;
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << format_complex(c) << ")";
    for (const auto& [v, e] : m) {
      os << "*" << v;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (accept('+'))
        p = p + term();
      else if (accept('-'))
        p = p - term();
      else
        return p;
    }
  }

  Poly term() {
    Poly p = unary();
    for (;;) {
      if (accept('*')) {
        p = p * unary();
      } else if (accept('/')) {
        Poly d = unary();
        if (!d.is_constant() || d.constant() == cplx(0.0)) fail("division by a non-constant or zero");
        p = p * Poly(1.0 / d.constant());
      } else {
        return p;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly b = atom();
    if (accept('^')) {
      skip();
      bool paren = accept('(');
      bool neg = accept('-');
      skip();
      size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
      if (st == pos_) fail("expected integer exponent");
      int n = std::stoi(s_.substr(st, pos_ - st));
      if (paren && !accept(')')) fail("expected ')' after exponent");
      if (neg) {
        if (!b.is_constant()) fail("negative power of a non-constant");
        b = Poly(std::pow(b.constant(), double(-n)));
      } else {
        b = b.pow(n);
      }
    }
    return b;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit((unsigned char)c) || c == '.') {
      size_t st = pos_;
      while (pos_ < s_.size() && (std::isdigit((unsigned char)s_[pos_]) || s_[pos_] == '.')) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
        size_t save = pos_;
        ++pos_;
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
        size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
        if (ds == pos_) pos_ = save;
      }
      std::string num = s_.substr(st, pos_ - st);
      char* end = nullptr;
      double v = std::strtod(num.c_str(), &end);
      if (end != num.c_str() + num.size()) fail("bad number '" + num + "'");
      if (pos_ < s_.size() && s_[pos_] == 'i' &&
          (pos_ + 1 == s_.size() || !std::isalnum((unsigned char)s_[pos_ + 1]))) {
        ++pos_;
        return Poly(cplx(0.0, v));
      }
      return Poly(v);
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t st = pos_;
      while (pos_ < s_.size() && (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_')) ++pos_;
      std::string id = s_.substr(st, pos_ - st);
      if (id == "i") return Poly(cplx(0.0, 1.0));
      if (id == "pi") return Poly(std::numbers::pi);
      return Poly::var(id);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text) { return Parser(text).parse(); }

cplx parse_complex(const std::string& text) {
  Poly p = parse_poly(text);
  if (!p.is_constant()) throw Error(ErrorCode::ParseError, "not a complex literal: \"" + text + "\"");
  cplx z = p.constant();
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw Error(ErrorCode::ParseError, "non-finite literal \"" + text + "\"");
  return z;
}

}  // namespace gl4
