#pragma once

#include <stdexcept>
#include <string>

namespace jackpos {

// Raised on exact division by a zero element (in Q or Q(t)).
struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

// Evaluating a rational function at one of its poles.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Malformed textual input (partitions, rationals, polynomials).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A request outside the range where an operation is defined or faithful,
// e.g. a power-sum expansion in degree > n.
struct UnsupportedRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// An internal invariant failed (e.g. a singular interpolation system).
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace jackpos
