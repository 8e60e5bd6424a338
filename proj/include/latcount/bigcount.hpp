#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace latcount {

/// Exact nonnegative count. Every N(.) value, window count and recurrence
/// term in the library is carried in this type.
using BigCount = mpz_class;

enum class ErrorKind {
  InvalidArgument,
  ParseError,
  GraphTooLarge,
  GraphDisconnected,
  StateSpaceOverflow,
  EngineUnavailable,
  ConsistencyFailure,
  NonConvergence,
  IoError,
};

class CountError : public std::runtime_error {
 public:
  CountError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string to_decimal(const BigCount& value) { return value.get_str(10); }

inline BigCount from_decimal(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw CountError(ErrorKind::ParseError, "not a decimal count: '" + text + "'");
  }
  return BigCount(text, 10);
}

/// Natural logarithm of a positive count, accurate to double precision
/// regardless of magnitude.
double log_count(const BigCount& value);

/// value^(1/root), computed through log_count.
double nth_root(const BigCount& value, double root);

}  // namespace latcount
