#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers for
// counts and automorphism orders, exact rationals for vector coefficients.
// Identities are checked with equality, never with tolerances.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace updown {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

[[nodiscard]] inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

[[nodiscard]] inline bool is_integer(const Rational& r) {
    return denominator(r) == 1;
}

/// Exact rational rendered as "n" or "n/d".
[[nodiscard]] inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad caller input: unknown object, malformed encoding, wrong level gap.
struct ArgumentError : Error {
    using Error::Error;
};

/// A documented precondition does not hold (e.g. structure not unilateral).
struct PreconditionError : Error {
    using Error::Error;
};

/// Level caps, truncation overflow, or the UPDOWN_MAX_CELLS guard.
struct ResourceError : Error {
    using Error::Error;
};

/// Operator application hit the truncation boundary.
struct OutOfRangeError : Error {
    using Error::Error;
};

/// Internal consistency violation (generator emitted non-canonical data, ...).
struct InvariantError : Error {
    using Error::Error;
};

/// Requested a construction with no known concrete description.
struct UnsupportedError : Error {
    using Error::Error;
};

}  // namespace updown
