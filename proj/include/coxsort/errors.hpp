#pragma once

#include <stdexcept>
#include <string>

namespace coxsort {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedMatrix : Error {
  using Error::Error;
};
struct NotFinite : Error {
  using Error::Error;
};
struct SystemMismatch : Error {
  using Error::Error;
};
struct NotInitial : Error {
  using Error::Error;
};
struct NotSortable : Error {
  using Error::Error;
};
struct Reducible : Error {
  using Error::Error;
};
struct KindMismatch : Error {
  using Error::Error;
};
struct NotNoncrossing : Error {
  using Error::Error;
};
struct BijectionViolation : Error {
  using Error::Error;
};
struct SearchExhausted : Error {
  using Error::Error;
};
struct IterationCap : Error {
  using Error::Error;
};
struct NumericalDrift : Error {
  using Error::Error;
};
struct NonInteger : Error {
  using Error::Error;
};

}  // namespace coxsort
