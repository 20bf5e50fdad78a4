#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kuramoto_signed {

/// Precondition or domain violation in a library call.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Integration produced a non-finite value.
class NumericalError : public Error {
public:
    NumericalError(const std::string& what, std::size_t step)
        : Error(what + " (step " + std::to_string(step) + ")"), step_(step) {}

    [[nodiscard]] std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

}  // namespace kuramoto_signed
