#pragma once

#include <stdexcept>
#include <string>

namespace inflation {

enum class ErrorCode {
  parse = 2,
  budget_exceeded = 3,
  infeasible = 4,
  precondition = 5,
  internal = 6,
};

/// Exception carrying a machine-readable code; the CLI maps codes to exit
/// statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

const char* to_string(ErrorCode code) noexcept;

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace inflation
