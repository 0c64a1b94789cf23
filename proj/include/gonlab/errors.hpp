#pragma once

#include <stdexcept>

namespace gonlab {

/// A configured guard (enumeration size, vertex cap, ...) would be exceeded.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gonlab
