#include "uarep/error.hpp"

namespace uarep {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::MixedTerm: return "MixedTerm";
    case ErrorKind::SlotOutOfRange: return "SlotOutOfRange";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotSubalgebra: return "NotSubalgebra";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::DifferentParents: return "DifferentParents";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NotMorphism: return "NotMorphism";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotBasis: return "NotBasis";
    case ErrorKind::NotInManifold: return "NotInManifold";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::WellDefinednessFailure: return "WellDefinednessFailure";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Error";
}

}  // namespace uarep
