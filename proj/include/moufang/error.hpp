#pragma once

#include <stdexcept>
#include <string>

namespace moufang {

enum class ErrorCode {
  InvalidArgument,
  Domain,          // a lifted scalar operation left its analytic domain
  ChartDomain,     // a point or product fell outside the identity chart
  NotUnit,         // element handed to the chart is not of unit norm
  SingularMatrix,
  ZeroDivisor,
  LevelMismatch,
  Unsupported,
  Parse,
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

}  // namespace moufang
