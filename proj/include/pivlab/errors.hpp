#pragma once

#include <stdexcept>
#include <string>

namespace pivlab {

// Requested accuracy cannot be certified at the working precision.
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// A search / assembly routine exhausted its candidates.
struct ConstructionError : std::runtime_error {
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pivlab
