#pragma once

#include <stdexcept>
#include <string>

namespace chargelab {

// Raised when user-supplied data (a partition, a filling, a column) fails a
// precondition. `condition()` names the violated rule so callers can report it.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string condition, const std::string& what)
      : std::runtime_error(what), condition_(std::move(condition)) {}
  explicit ValidationError(const std::string& what)
      : ValidationError("invalid-input", what) {}

  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

// A broken internal invariant, e.g. an inexact alternant division.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace chargelab
