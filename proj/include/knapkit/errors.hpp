#ifndef KNAPKIT_ERRORS_HPP
#define KNAPKIT_ERRORS_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace knapkit {

using Value = std::int64_t;

/// Base of every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed instance, out-of-range option, violated invariant.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A candidate solution references items or knapsacks that do not exist.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A DP table or enumeration would exceed its configured ceiling.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A precondition of a transformation was not met by its caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Integer overflow while summing instance values.
class OverflowError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

inline Value checked_add(Value a, Value b) {
  Value out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow: " + std::to_string(a) + " + " +
                        std::to_string(b));
  }
  return out;
}

inline Value checked_mul(Value a, Value b) {
  Value out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow: " + std::to_string(a) + " * " +
                        std::to_string(b));
  }
  return out;
}

/// Product used for table-size guards; saturates instead of throwing so the
/// caller can report the offending size as a resource error.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return out;
}

}  // namespace knapkit

#endif  // KNAPKIT_ERRORS_HPP
