#ifndef REFMON_EXCEPTION_HPP_
#define REFMON_EXCEPTION_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace refmon {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised by the text-format readers; carries the 1-based line number.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& msg)
        : Error("line " + std::to_string(line) + ": " + msg), _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  // A homomorphism candidate does not respect a defining relation.
  class CertificateError : public Error {
   public:
    using Error::Error;
  };

  // An operation was called outside its precondition.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

}  // namespace refmon

#endif  // REFMON_EXCEPTION_HPP_
