#pragma once

#include <stdexcept>
#include <string>

namespace fgroth {

// Malformed input: bad partitions, mismatched lengths, out-of-range flags.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An invariant that must hold by construction was violated
// (e.g. a final coefficient that is not an integer).
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// A series coefficient was requested outside the range where it is known exactly.
struct WindowError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

}  // namespace fgroth
