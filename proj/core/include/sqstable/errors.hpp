#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sqstable {

// Malformed text input or out-of-range generator parameters.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact solver or enumeration refused because the graph exceeds a cap.
// Distinct from any legitimate result (an empty family, a zero count).
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap_name, int limit, int actual)
      : std::runtime_error(cap_name + " exceeded: n=" + std::to_string(actual) +
                           " > " + std::to_string(limit)),
        cap_name_(std::move(cap_name)),
        limit_(limit),
        actual_(actual) {}

  const std::string& cap_name() const { return cap_name_; }
  int limit() const { return limit_; }
  int actual() const { return actual_; }

 private:
  std::string cap_name_;
  int limit_;
  int actual_;
};

// A caller passed arguments outside an operation's domain (e.g. a set that
// is not a maximum stable set where one is required).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two independent computations that must agree did not. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sqstable
