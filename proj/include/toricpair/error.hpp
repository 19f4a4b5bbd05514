#pragma once

#include <stdexcept>
#include <string>

namespace toricpair {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (bad exponent, point outside a cone, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A discrepancy computation was requested on a cone that is not Q-Gorenstein.
class NotQGorenstein : public Error {
 public:
  NotQGorenstein() : Error("cone is not Q-Gorenstein") {}
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded() : Error("resolution budget exceeded") {}
};

}  // namespace toricpair
