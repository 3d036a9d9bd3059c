#include "euclid/errors.hpp"

namespace euclid {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::TagMismatch: return "TagMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::NoSqrtInField: return "NoSqrtInField";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotGreater: return "NotGreater";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::CoincidentCenters: return "CoincidentCenters";
    case ErrorCode::UnsupportedForKind: return "UnsupportedForKind";
    case ErrorCode::UnsupportedScalar: return "UnsupportedScalar";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UseBeforeDecl: return "UseBeforeDecl";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::NoIntersection: return "NoIntersection";
    case ErrorCode::NotInModel: return "NotInModel";
    case ErrorCode::TransversalMisses: return "TransversalMisses";
    case ErrorCode::UnsupportedId: return "UnsupportedId";
    case ErrorCode::UnrenderableScene: return "UnrenderableScene";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace euclid
