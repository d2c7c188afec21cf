#pragma once

#include <stdexcept>
#include <string>

namespace curvehyp {

enum class ErrorKind {
  Validation,
  Domain,
  NonConvergence,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& what)
      : std::runtime_error(what), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  // short machine-readable tag, e.g. "gcd" or "zero-denominator"
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& code, const std::string& msg) {
  throw Error(kind, code, msg);
}

}  // namespace curvehyp
