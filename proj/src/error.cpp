#include "frobroot/error.hpp"

namespace frobroot {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ok: return "ok";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::field_mismatch: return "FieldMismatch";
    case ErrorCode::ring_mismatch: return "RingMismatch";
    case ErrorCode::exponent_overflow: return "ExponentOverflow";
    case ErrorCode::arity_mismatch: return "ArityMismatch";
    case ErrorCode::zero_ideal: return "ZeroIdeal";
    case ErrorCode::zero_divisor_ideal: return "ZeroDivisorIdeal";
    case ErrorCode::not_m_primary: return "NotMPrimary";
    case ErrorCode::no_jump_in_window: return "NoJumpInWindow";
    case ErrorCode::truncated: return "Truncated";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::unknown_name: return "UnknownName";
    case ErrorCode::duplicate_ring: return "DuplicateRing";
  }
  return "Unknown";
}

}  // namespace frobroot
