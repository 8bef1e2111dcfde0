#pragma once

#include <stdexcept>

namespace chandelier {

// Physically invalid or malformed input (CLI maps this to exit code 2).
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request exceeds an enumeration or size cap (CLI maps this to exit code 3).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace chandelier
