#pragma once

#include <stdexcept>
#include <string>

namespace nsde {

/// Thrown when a mesh fails validation (endpoints, monotonicity, step sums).
class MeshError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown on any shape disagreement between fields, parameters and states.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an integration produces a non-finite state. Carries the step
/// index at which the blow-up was detected; never clamps or continues.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(std::size_t step, const std::string& what)
        : std::runtime_error("divergence at step " + std::to_string(step) + ": " + what),
          step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

} // namespace nsde
