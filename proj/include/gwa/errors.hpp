#pragma once

#include <stdexcept>
#include <string>

namespace gwa {

enum class Errc {
  DivisionByZero,
  ModeMismatch,
  Parse,
  UndefinedVariable,
  NotAnAutomorphism,
  RelationNotPreserved,
  WindowExceeded,
  DegreeBoundTooSmall,
  Unsupported,
  NotSigmaStable,
  ResourceBudgetExceeded,
  NotFiniteOrder,
  DimensionCap,
  HasRelations,
  ValidationFailed,
  InvalidArgument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gwa
