#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nagc {

// Bad user input: malformed files, dimension mismatches, out-of-range
// hyperparameters. Maps to exit code 1 in the CLI.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A factor matrix (or a recorded loss) became NaN/Inf during optimization.
// Carries the iteration at which the failure was detected. Exit code 2.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, std::size_t iteration)
      : std::runtime_error(what + " (iteration " + std::to_string(iteration) + ")"),
        iteration_(iteration) {}

  std::size_t iteration() const { return iteration_; }

 private:
  std::size_t iteration_;
};

}  // namespace nagc
