#ifndef COXTWIST_ERROR_HPP_
#define COXTWIST_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coxtwist {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Diagram text that does not follow the file grammar. Line and column are
  // 1-based and point at the offending token.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& what);

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  class UnknownVertex : public Error {
   public:
    explicit UnknownVertex(std::string const& name);
  };

  // An operation was called outside its domain (non-spherical J, invalid
  // admissible pair, forbidden subdiagram present, ...).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // Exact arithmetic left the range of the fixed-width coefficients, or the
  // cyclotomic modulus demanded by a diagram exceeds the configured cap.
  class ArithmeticLimit : public Error {
   public:
    using Error::Error;
  };

}  // namespace coxtwist

#endif  // COXTWIST_ERROR_HPP_
