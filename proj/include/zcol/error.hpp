#pragma once

#include <stdexcept>
#include <string>

namespace zcol {

enum class errc {
  MalformedWord,
  GeneratorOutOfRange,
  NonPositiveStrands,
  CrossingFreeComponent,
  ClosureMismatch,
  LengthMismatch,
  NotSquare,
  NotColorable,
  ComponentCountNotOne,
  InvalidParams,
  OddR,
  UnsupportedParity,
  CarrierTooLarge,
  BudgetExceeded,
  IoFailure,
  InvalidColoring,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::MalformedWord: return "MalformedWord";
    case errc::GeneratorOutOfRange: return "GeneratorOutOfRange";
    case errc::NonPositiveStrands: return "NonPositiveStrands";
    case errc::CrossingFreeComponent: return "CrossingFreeComponent";
    case errc::ClosureMismatch: return "ClosureMismatch";
    case errc::LengthMismatch: return "LengthMismatch";
    case errc::NotSquare: return "NotSquare";
    case errc::NotColorable: return "NotColorable";
    case errc::ComponentCountNotOne: return "ComponentCountNotOne";
    case errc::InvalidParams: return "InvalidParams";
    case errc::OddR: return "OddR";
    case errc::UnsupportedParity: return "UnsupportedParity";
    case errc::CarrierTooLarge: return "CarrierTooLarge";
    case errc::BudgetExceeded: return "BudgetExceeded";
    case errc::IoFailure: return "IoFailure";
    case errc::InvalidColoring: return "InvalidColoring";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace zcol
