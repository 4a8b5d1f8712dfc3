#pragma once

#include <stdexcept>
#include <string>

namespace algoglue {

enum class Errc {
  UnknownInstruction,
  UnknownVariable,
  UnknownName,
  ArityMismatch,
  FrameMismatch,
  MissingProgram,
  MissingLabel,
  ConventionViolation,
  SpecificationMismatch,
  UnboundSymbol,
  ModelCheckFailed,
  BudgetExceeded,
  Parse,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace algoglue
