#pragma once

#include <stdexcept>

namespace qrng {

// Input object is not a physical state / density matrix / unit direction.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation called outside its contract (ranges, perpendicularity, resolution, ...).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace qrng
