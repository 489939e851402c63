#pragma once

#include <stdexcept>

namespace motus {

// Precondition violations on quantities: nonpositive magnitude, negative
// time, a kinetic term larger than the total height, and so on.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Comparing, multiplying out, or forming a ratio of magnitudes of
// different kinds.
struct GenusError : std::domain_error {
    using std::domain_error::domain_error;
};

// A search bound or iteration depth that is not a positive integer.
struct BoundError : std::domain_error {
    using std::domain_error::domain_error;
};

// Asked to separate two ratios that are equal.
struct NoSeparatorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A density sequence that does not decrease strictly (or is too short to
// decrease at all).
struct SequenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation that needs a specific uniformity class got something else.
struct ClassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The two bodies never meet: closing velocity is zero or negative.
struct NoCollisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An empty parameter range where at least one grid point is required.
struct RangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent scenario input.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A table that cannot be drawn with the requested plot kind.
struct PlotError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace motus
