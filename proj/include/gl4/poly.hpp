#pragma once

#include <map>
#include <string>

#include "gl4/error.hpp"

namespace gl4 {

using Monomial = std::map<std::string, int>;
using Point = std::map<std::string, cplx>;

// Multivariate polynomial with complex coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(cplx c);  // NOLINT: constants convert implicitly
  static Poly var(const std::string& name);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly pow(int n) const;

  cplx eval(const Point& pt) const;
  // Substitute known values, keep the remaining variables symbolic.
  Poly partial(const Point& pt) const;
  // Shift variables: x -> x + d.
  Poly shifted(const std::map<std::string, int>& d) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  cplx constant() const;
  int degree_in(const std::string& v) const;
  // For a polynomial of degree <= 1 in v: coefficient of v (must be constant) and the v-free part.
  cplx linear_coeff(const std::string& v) const;
  Poly without(const std::string& v) const;

  const std::map<Monomial, cplx>& terms() const { return terms_; }
  std::string str() const;

 private:
  void add_term(const Monomial& m, cplx c);
  std::map<Monomial, cplx> terms_;
};

// Grammar: sums, products, integer powers (^n), parentheses, decimal numbers,
// imaginary literals such as 2i or i, the constant pi, identifiers.
// Division only by constants.
Poly parse_poly(const std::string& text);

// A complex literal "a", "a+bi", "bi"; throws ParseError otherwise.
cplx parse_complex(const std::string& text);

}  // namespace gl4
