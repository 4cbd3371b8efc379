#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polylift {

  /// Base of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class DimensionMismatch : public Error {
   public:
    using Error::Error;
  };

  class IndexOutOfRange : public Error {
   public:
    using Error::Error;
  };

  class DimTooLarge : public Error {
   public:
    using Error::Error;
  };

  /// A replacement-only word was requested for a bijection.
  class PermutationalInput : public Error {
   public:
    using Error::Error;
  };

  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  class UnboundVariable : public Error {
   public:
    using Error::Error;
  };

  /// A formula mentions a relation symbol the model does not interpret.
  class UninterpretedSymbol : public Error {
   public:
    using Error::Error;
  };

  class MalformedTables : public Error {
   public:
    using Error::Error;
  };

  /// Raised when a supplied map fails to be the homomorphism it claims to be.
  class VerificationFailure : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}

    std::size_t position() const noexcept { return pos_; }

   private:
    std::size_t pos_;
  };

}  // namespace polylift
