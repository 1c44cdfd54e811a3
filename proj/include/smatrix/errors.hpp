#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace smatrix {

enum class Errc {
  // input / validation failures
  ParseError,
  ShapeMismatch,
  ConductorMismatch,
  DivisionByZero,
  NotSquare,
  NotSubgroup,
  NotInCenter,
  InvalidQuadraticForm,
  NotACocycle,
  NotRealizable,
  NotAdmissible,
  NoMuFound,
  BaseMismatch,
  // arithmetic or convention bugs; these must never fire on valid input
  InternalInconsistency,
  ConventionError,
  WellDefinednessViolation,
  LiftNotFound,
  // size caps
  GroupTooLarge,
  OrderTooLarge,
  BoundsExceeded,
  ConductorCapExceeded,
};

enum class ErrorClass { Validation, Inconsistency, Bounds };

std::string_view errc_name(Errc code) noexcept;
ErrorClass error_class(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ConductorMismatch: return "ConductorMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::NotInCenter: return "NotInCenter";
    case Errc::InvalidQuadraticForm: return "InvalidQuadraticForm";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::NotRealizable: return "NotRealizable";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::NoMuFound: return "NoMuFound";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::ConventionError: return "ConventionError";
    case Errc::WellDefinednessViolation: return "WellDefinednessViolation";
    case Errc::LiftNotFound: return "LiftNotFound";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::BoundsExceeded: return "BoundsExceeded";
    case Errc::ConductorCapExceeded: return "ConductorCapExceeded";
  }
  return "Unknown";
}

inline ErrorClass error_class(Errc code) noexcept {
  switch (code) {
    case Errc::InternalInconsistency:
    case Errc::ConventionError:
    case Errc::WellDefinednessViolation:
    case Errc::LiftNotFound:
      return ErrorClass::Inconsistency;
    case Errc::GroupTooLarge:
    case Errc::OrderTooLarge:
    case Errc::BoundsExceeded:
    case Errc::ConductorCapExceeded:
      return ErrorClass::Bounds;
    default:
      return ErrorClass::Validation;
  }
}

}  // namespace smatrix
