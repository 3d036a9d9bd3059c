#pragma once

#include <stdexcept>
#include <string>

namespace euclid {

// Every failure the kernel and the geometry layer can raise. The DSL executor
// catches these and turns them into step outcomes; anything escaping to the
// CLI is a hard error.
enum class ErrorCode {
  TagMismatch,
  DivisionByZero,
  PrecisionExhausted,
  NegativeRadicand,
  NoSqrtInField,
  KindMismatch,
  NotGreater,
  CoincidentPoints,
  CoincidentCenters,
  UnsupportedForKind,
  UnsupportedScalar,
  Degenerate,
  SyntaxError,
  DuplicateId,
  UseBeforeDecl,
  TypeMismatch,
  ArityError,
  NoIntersection,
  NotInModel,
  TransversalMisses,
  UnsupportedId,
  UnrenderableScene,
  InternalError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace euclid
