#pragma once

#include <stdexcept>
#include <string>

namespace sphlab {

enum class ErrorCode {
  contract_violation,
  domain,
  unsupported_group,
  wrong_group,
  incomplete_type,
  quadrature_underresolved,
  reducible,
  multiplicity,
  dimension,
  validation,
  theorem_precondition,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::contract_violation: return "contract violation";
    case ErrorCode::domain: return "domain error";
    case ErrorCode::unsupported_group: return "unsupported group";
    case ErrorCode::wrong_group: return "wrong group";
    case ErrorCode::incomplete_type: return "incomplete type";
    case ErrorCode::quadrature_underresolved: return "quadrature underresolved";
    case ErrorCode::reducible: return "reducible representation";
    case ErrorCode::multiplicity: return "multiplicity error";
    case ErrorCode::dimension: return "dimension error";
    case ErrorCode::validation: return "validation error";
    case ErrorCode::theorem_precondition: return "theorem precondition failure";
  }
  return "unknown error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sphlab
