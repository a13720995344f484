#pragma once

#include <stdexcept>
#include <string>

namespace linfree {

// base for every domain failure raised by the library
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// collinear triangle, zero direction, and similar malformed geometric input
struct degenerate_error : error {
    using error::error;
};

// an exact predicate hit a zero it needed to be nonzero
struct general_position_error : error {
    using error::error;
};

// caller violated a documented precondition (graph shape, parameter range)
struct precondition_error : error {
    using error::error;
};

// file contents could not be parsed into a domain value
struct parse_error : error {
    using error::error;
};

}  // namespace linfree
