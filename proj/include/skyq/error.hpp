#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skyq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller-supplied parameter (k < 1, off-simplex weights, dimension mismatch).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed or unsuitable input data (CSV parse errors, unnormalized data).
class DataError : public Error {
 public:
  using Error::Error;
};

class EmptyRegion : public Error {
 public:
  EmptyRegion() : Error("empty region") {}
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search would exceed its subset budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Requested output size cannot be reached at any radius.
class Unreachable : public Error {
 public:
  Unreachable(std::size_t requested, std::size_t achievable)
      : Error("m unreachable: requested " + std::to_string(requested) +
              ", max achievable " + std::to_string(achievable)),
        requested_(requested),
        achievable_(achievable) {}

  std::size_t requested() const { return requested_; }
  std::size_t achievable() const { return achievable_; }

 private:
  std::size_t requested_;
  std::size_t achievable_;
};

}  // namespace skyq
