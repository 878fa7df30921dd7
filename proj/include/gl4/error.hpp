#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace gl4 {

using cplx = std::complex<double>;

enum class ErrorCode {
  PoleAt,
  InfeasibleStrip,
  NoConvergence,
  NaNEncountered,
  DomainViolation,
  InvalidWeight,
  InvalidIndex,
  InconsistentRelations,
  PreconditionViolation,
  UnsupportedCase,
  ParseError,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

std::string format_complex(cplx z, int digits = 12);

}  // namespace gl4
