#pragma once

#include <stdexcept>
#include <string>

namespace kabelian {

enum class ErrorCode {
  domain,             // argument violates an operation's precondition
  out_of_range,       // position or size outside the supported range
  limit_exceeded,     // search node budget exhausted
  unavailable,        // requested computation mode is infeasible
  not_representable,  // word has no representative in a normal-form family
};

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

}  // namespace kabelian
