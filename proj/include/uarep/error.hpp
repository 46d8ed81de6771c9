#ifndef UAREP_ERROR_HPP_
#define UAREP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace uarep {

// Every failure the library reports, with a stable name used by the CLI.
enum class ErrorKind {
  SyntaxError,
  ArityMismatch,
  UnknownSymbol,
  UnknownElement,
  DuplicateLabel,
  LimitExceeded,
  MixedTerm,
  SlotOutOfRange,
  IndexOutOfRange,
  NotSubalgebra,
  NotStable,
  DifferentParents,
  NotGenerating,
  Inconsistent,
  NotMorphism,
  NotAutomorphism,
  NotBasis,
  NotInManifold,
  BudgetExceeded,
  ContextMismatch,
  WellDefinednessFailure,
  InternalError,
};

std::string_view error_name(ErrorKind kind);

// Parse errors come from reading text (model files, terms, CLI arguments);
// domain errors come from the algebra itself. The CLI maps the category to
// its exit code.
enum class ErrorCategory { parse, domain };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, ErrorCategory category, const std::string& message)
      : std::runtime_error(std::string(error_name(kind)) + ": " + message),
        kind_(kind),
        category_(category) {}

  ErrorKind kind() const { return kind_; }
  ErrorCategory category() const { return category_; }
  std::string_view name() const { return error_name(kind_); }

 private:
  ErrorKind kind_;
  ErrorCategory category_;
};

[[noreturn]] inline void throw_parse(ErrorKind kind, const std::string& message) {
  throw Error(kind, ErrorCategory::parse, message);
}

[[noreturn]] inline void throw_domain(ErrorKind kind, const std::string& message) {
  throw Error(kind, ErrorCategory::domain, message);
}

}  // namespace uarep

#endif  // UAREP_ERROR_HPP_
