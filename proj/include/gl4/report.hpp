#pragma once

#include <string>
#include <vector>

#include "gl4/error.hpp"

namespace gl4 {

struct Comparison {
  std::string point;
  cplx lhs = 0.0;
  cplx rhs = 0.0;
  double rel_err = 0.0;
};

using Failure = Comparison;

struct IdentityReport {
  std::string name;
  int samples = 0;
  double max_rel_err = 0.0;
  double tolerance = 0.0;
  double err_est = 0.0;  // largest quadrature error estimate seen
  bool pass = true;
  std::vector<Failure> failures;
  std::vector<Comparison> rows;  // every comparison, capped at kMaxRows
  static constexpr size_t kMaxRows = 4096;

  // Fold one comparison into the report.
  void record(const std::string& point, cplx lhs, cplx rhs, double rel_err);
  void merge(const IdentityReport& o);
};

// |a - b| / max(|a|, |b|), zero when both vanish.
double rel_diff(cplx a, cplx b);

}  // namespace gl4
