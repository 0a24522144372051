#pragma once

#include <stdexcept>
#include <string>

namespace orientlat {

/// Malformed or invalid input: bad edge lists, out-of-range vertices,
/// precondition violations on user-supplied values.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphError : public InputError {
 public:
  using InputError::InputError;
};

class OrientationError : public InputError {
 public:
  using InputError::InputError;
};

/// Raised by the firing-sequence validator; carries the 1-based step
/// at which replay failed (0 when the failure is not tied to a step).
class FiringError : public InputError {
 public:
  FiringError(std::size_t step, const std::string& what)
      : InputError(what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class GeometryError : public InputError {
 public:
  using InputError::InputError;
};

/// A structural property that the theory guarantees did not hold
/// (non-unique bound, several minima, negative count). Always a bug or a
/// counterexample, never bad input.
class CounterexampleError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace orientlat
