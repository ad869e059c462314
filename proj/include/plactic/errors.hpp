#pragma once

#include <stdexcept>
#include <string>

namespace plactic {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed word text.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // A word cannot be rendered in the requested style.
  class FormatError : public Error {
   public:
    using Error::Error;
  };

  // A letter or rank lies outside the alphabet an operation works over.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // Arguments violate an operation's precondition (e.g. mismatched content).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // Rows handed to a Tableau do not form a semistandard tableau.
  class InvalidTableau : public Error {
   public:
    using Error::Error;
  };

  // The Knuth-class search exceeded its state budget.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

}  // namespace plactic
