#pragma once

#include <stdexcept>
#include <string>

namespace apc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// input is malformed (bad text, wrong dimensions, invalid arguments)
struct InvalidInput : Error {
    using Error::Error;
};

struct ParseError : InvalidInput {
    using InvalidInput::InvalidInput;
};

// exact division requested but the divisor does not divide the dividend
struct InexactDivision : Error {
    using Error::Error;
};

// a linear system c.K = b has no solution; always an internal invariant bug
struct Inconsistent : Error {
    using Error::Error;
};

// fewer independent columns than requested, after all retries
struct RankDeficient : Error {
    using Error::Error;
};

// the graded slice fails the generic-exactness rank conditions
struct NotGenericallyExact : Error {
    using Error::Error;
};

// n = 2 and gcd(f0,f1,f2) has full degree: the map does not define a curve
struct DegenerateMap : Error {
    using Error::Error;
};

// some composition Z_{p-1} . Z_p is nonzero
struct ComplexPropertyViolated : Error {
    using Error::Error;
};

// the computed determinant does not vanish on the parameterization
struct OracleFailed : Error {
    using Error::Error;
};

}  // namespace apc
