#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbit_bell {

enum class ErrorKind {
  NonOrthogonalGenerator,
  OrderExceeded,
  NonUnitInitialVector,
  StabilizerMismatch,
  BudgetExceeded,
  DimensionMismatch,
  DegenerateOrbit,
  OrbitNotClosed,
  UnknownSolid,
  Parse,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonOrthogonalGenerator: return "NonOrthogonalGenerator";
    case ErrorKind::OrderExceeded: return "OrderExceeded";
    case ErrorKind::NonUnitInitialVector: return "NonUnitInitialVector";
    case ErrorKind::StabilizerMismatch: return "StabilizerMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegenerateOrbit: return "DegenerateOrbit";
    case ErrorKind::OrbitNotClosed: return "OrbitNotClosed";
    case ErrorKind::UnknownSolid: return "UnknownSolid";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace orbit_bell
