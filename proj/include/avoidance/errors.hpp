#pragma once

#include <stdexcept>
#include <string>

namespace avoidance {

// A continued-fraction spec string could not be parsed.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite (period-empty) spec ran out of partial quotients.  Finite specs
// are allowed for exploratory use, but nothing is ever extrapolated.
struct QuotientsExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The interval engine hit its depth cap before a comparison was decided.
// Unreachable for periodic specs at sane caps; exists so pathological
// configurations fail cleanly instead of spinning.
struct ResolutionExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The question cannot be answered from a finite prefix (e.g. asking whether
// infinitely many quotients equal 1 without a periodic tail).
struct Undecidable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace avoidance
