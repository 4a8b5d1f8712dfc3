#include "algoglue/error.hpp"

namespace algoglue {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::UnknownInstruction: return "UnknownInstruction";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::UnknownName: return "UnknownName";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::FrameMismatch: return "FrameMismatch";
    case Errc::MissingProgram: return "MissingProgram";
    case Errc::MissingLabel: return "MissingLabel";
    case Errc::ConventionViolation: return "ConventionViolation";
    case Errc::SpecificationMismatch: return "SpecificationMismatch";
    case Errc::UnboundSymbol: return "UnboundSymbol";
    case Errc::ModelCheckFailed: return "ModelCheckFailed";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::Parse: return "Parse";
  }
  return "Error";
}

}  // namespace algoglue
