#pragma once

#include <stdexcept>
#include <string>

namespace ilsum {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (files, schemas, ids).
struct DataError : Error {
  using Error::Error;
};

// Tensor shape mismatch; message names the primitive and both shapes.
struct DimensionError : Error {
  using Error::Error;
};

// Non-finite value produced where a finite one is required.
struct NumericError : Error {
  using Error::Error;
};

// API precondition violated by the caller.
struct ContractError : Error {
  using Error::Error;
};

}  // namespace ilsum
