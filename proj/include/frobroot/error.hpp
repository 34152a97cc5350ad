#pragma once

#include <stdexcept>
#include <string>

namespace frobroot {

/// Failure categories shared by the engine, the session runner and the C API.
/// Values are stable: they are returned verbatim through `frobroot.h`.
enum class ErrorCode : int {
  ok = 0,
  invalid_argument = 1,
  division_by_zero = 2,
  field_mismatch = 3,
  ring_mismatch = 4,
  exponent_overflow = 5,
  arity_mismatch = 6,
  zero_ideal = 7,
  zero_divisor_ideal = 8,
  not_m_primary = 9,
  no_jump_in_window = 10,
  truncated = 11,
  syntax_error = 12,
  unknown_name = 13,
  duplicate_ring = 14,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace frobroot
