#pragma once

// Arbitrary-precision integers are GMP's mpz_class. Matching counts grow
// exponentially in the path length, so nothing in this library uses fixed-width
// integers for a count, numerator, or radicand.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace latsnake {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// Parses an optionally signed decimal integer. Throws InvalidInput.
BigInt parse_bigint(std::string_view text);

/// floor(sqrt(x)) for x >= 0.
BigInt isqrt(const BigInt& x);

bool is_perfect_square(const BigInt& x);

inline int sign(const BigInt& x) { return sgn(x); }

/// Squarefree decomposition x = square^2 * core.
///
/// `exact` is false only when trial division ran past its budget and the
/// remaining cofactor might still hide the square of a large prime. Radicands
/// below 8e18 are always decomposed exactly.
struct SquarefreeSplit {
    BigInt square;
    BigInt core;
    bool exact = true;
};

SquarefreeSplit squarefree_split(const BigInt& x);

}  // namespace latsnake
