#pragma once

#include <stdexcept>
#include <string>

namespace qpw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structure or relation does not meet the precondition of an operation.
struct PreconditionError : Error {
  using Error::Error;
};

// Malformed textual input. `location` is a JSON pointer or a byte offset.
struct ParseError : Error {
  ParseError(std::string location, const std::string& what)
      : Error(location.empty() ? what : location + ": " + what), location(std::move(location)) {}
  std::string location;
};

// A search or enumeration would exceed its configured size limit.
struct GuardExceeded : Error {
  using Error::Error;
};

}  // namespace qpw
