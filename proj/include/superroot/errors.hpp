#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superroot {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "error"; }
};

class DimensionError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "dimension"; }
};

class ParameterError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "parameter"; }
};

/// An order functional vanishes on a root.
class InvalidOrderError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid-order"; }
};

class PreconditionError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

/// A matrix could not be written in the basis of a Lie superalgebra.
class DecompositionError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "decomposition"; }
};

/// No Steinberg decomposition was found within the search bounds. `frontier`
/// lists the intermediate weights that were explored without success.
class DecompositionFailure : public Error {
public:
  DecompositionFailure(const std::string& what, std::vector<std::string> frontier)
      : Error(what), frontier_(std::move(frontier)) {}
  const char* kind() const noexcept override { return "decomposition-failure"; }
  const std::vector<std::string>& frontier() const noexcept { return frontier_; }

private:
  std::vector<std::string> frontier_;
};

class NotImplementedError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "not-implemented"; }
};

/// JSON input rejected; the message starts with a path such as
/// `$.odd_roots[1].mult`.
class ValidationError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "validation"; }
};

}  // namespace superroot
