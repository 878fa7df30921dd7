#include "gl4/report.hpp"

#include <algorithm>
#include <cmath>

namespace gl4 {

double rel_diff(cplx a, cplx b) {
  double m = std::max(std::abs(a), std::abs(b));
  if (m == 0.0) return 0.0;
  return std::abs(a - b) / m;
}

void IdentityReport::record(const std::string& point, cplx lhs, cplx rhs, double rel_err) {
  ++samples;
  if (rows.size() < kMaxRows) rows.push_back({point, lhs, rhs, rel_err});
  if (!(rel_err <= max_rel_err)) max_rel_err = std::isnan(rel_err) ? INFINITY : rel_err;
  if (!(rel_err <= tolerance)) {
    pass = false;
    if (failures.size() < 16) failures.push_back({point, lhs, rhs, rel_err});
  }
}

void IdentityReport::merge(const IdentityReport& o) {
  samples += o.samples;
  max_rel_err = std::max(max_rel_err, o.max_rel_err);
  err_est = std::max(err_est, o.err_est);
  pass = pass && o.pass;
  for (const auto& f : o.failures)
    if (failures.size() < 16) failures.push_back(f);
  for (const auto& r : o.rows)
    if (rows.size() < kMaxRows) rows.push_back(r);
}

}  // namespace gl4
