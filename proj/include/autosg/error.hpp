#ifndef AUTOSG_ERROR_HPP_
#define AUTOSG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autosg {

  // Base of every exception thrown by the library.  Each subclass maps onto
  // one status code of the C API (see autosg.h).
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Invalid arguments: out-of-range indices, foreign symbols, mismatched
  // alphabets, malformed partitions.
  class UsageError : public Error {
   public:
    using Error::Error;
  };

  // Malformed text input.  line() is 1-based, 0 when unknown.
  class ParseError : public Error {
   public:
    ParseError(std::string const& message, std::size_t line = 0)
        : Error(line == 0 ? message
                          : "line " + std::to_string(line) + ": " + message),
          _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  // A mathematical precondition of a construction does not hold, e.g. the
  // designated state of a free product factor is not a left identity.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A configured resource bound would be exceeded.
  class CapacityError : public Error {
   public:
    using Error::Error;
  };

  // File could not be read or written.
  class IoError : public Error {
   public:
    using Error::Error;
  };

}  // namespace autosg

#endif  // AUTOSG_ERROR_HPP_
