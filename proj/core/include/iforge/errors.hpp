#ifndef IFORGE_ERRORS_HPP
#define IFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace iforge {

/// Raised for anything the caller did wrong: malformed text, field or
/// dimension mismatches, division by zero, singular inputs, violated
/// builder preconditions. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal invariant fails, e.g. a constructed
/// certificate that does not verify. Must never happen; the CLI maps
/// this to exit code 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace iforge

#endif
