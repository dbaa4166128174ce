#pragma once

#include <stdexcept>
#include <string>

namespace stcalc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

struct NotAUnit : Error {
  using Error::Error;
};

struct RingMismatch : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct IntegralityError : Error {
  using Error::Error;
};

struct PoleError : Error {
  using Error::Error;
};

}  // namespace stcalc
