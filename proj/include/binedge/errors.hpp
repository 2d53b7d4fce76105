#ifndef BINEDGE_ERRORS_HPP
#define BINEDGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace binedge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different polynomial rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial, graph or certificate text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The graph is disconnected where a connected graph is required.
class DisconnectedGraph : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A Groebner computation exceeded its time or size budget.
class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace binedge

#endif  // BINEDGE_ERRORS_HPP
