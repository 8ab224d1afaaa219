#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csdlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A constructor or operation precondition was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A size limit would be exceeded; the computation was refused.
class GuardrailError : public Error {
 public:
  GuardrailError(std::string limit_name, std::size_t limit, std::size_t requested)
      : Error(limit_name + " guardrail exceeded: " + std::to_string(requested) + " > " +
              std::to_string(limit)),
        limit_name_(std::move(limit_name)),
        limit_(limit),
        requested_(requested) {}

  const std::string& limit_name() const noexcept { return limit_name_; }
  std::size_t limit() const noexcept { return limit_; }
  std::size_t requested() const noexcept { return requested_; }

 private:
  std::string limit_name_;
  std::size_t limit_;
  std::size_t requested_;
};

// Two independent computations that must agree did not.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace csdlab
