#pragma once

#include <stdexcept>
#include <string>

namespace homlie {

enum class ErrorKind {
  usage,            // generic precondition violation
  field_mismatch,   // operands over different fields
  division_by_zero,
  reduction,        // rational has a denominator divisible by p
  ordering,         // product pair with i >= j
  duplicate,        // product pair listed twice
  shape,            // dimension / length mismatch, non-square determinant
  singular,         // non-invertible linear map
  parse,            // malformed literal or file
};

const char* to_string(ErrorKind kind) noexcept;

/// All input and precondition failures raised by the library. Anything else
/// escaping a call (std::bad_alloc, logic errors) is an internal defect.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace homlie
