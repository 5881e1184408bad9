#pragma once

// Finite continued fractions [a1, ..., an] = a1 + 1/(a2 + 1/(... + 1/an)) with
// positive integer coefficients, evaluated exactly through the 2x2 convergent
// matrices M(a) = [[a, 1], [1, 0]].

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latsnake/bigint.hpp"

namespace latsnake {

using Coeffs = std::vector<BigInt>;

/// Reduced fraction with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(BigInt num, BigInt den = 1);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    std::string str() const;  // "29/20", or "4" when den == 1

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);
    friend Rational operator*(const Rational& x, const Rational& y);
    friend Rational operator/(const Rational& x, const Rational& y);

private:
    BigInt num_ = 0;
    BigInt den_ = 1;
};

/// Product of M(a_i) over the coefficients, laid out as
///   [[p, r],
///    [q, s]]
/// so p/q is the value of the whole sequence and r/s the value with the last
/// coefficient dropped (r/s = 1/0 for a single coefficient).
struct ConvergentMatrix {
    BigInt p = 1;
    BigInt r = 0;
    BigInt q = 0;
    BigInt s = 1;

    /// p*s - q*r, always (-1)^k for k multiplied coefficients.
    BigInt det() const { return p * s - q * r; }

    friend bool operator==(const ConvergentMatrix&, const ConvergentMatrix&) = default;
};

/// Nonempty sequence of positive coefficients.
class ContinuedFraction {
public:
    /// Throws InvalidInput on an empty sequence or a coefficient below 1.
    explicit ContinuedFraction(Coeffs coeffs);

    const Coeffs& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }

    /// a_n >= 2 whenever n >= 2.
    bool is_canonical() const;

    std::string str() const;  // "1,2,4,2"

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

private:
    Coeffs coeffs_;
};

/// Throws InvalidInput unless `coeffs` is nonempty with every entry >= 1.
void require_valid_coeffs(std::span<const BigInt> coeffs);

/// Exact value via the convergent recurrence p_i = a_i p_{i-1} + p_{i-2}.
Rational evaluate(const ContinuedFraction& cf);
Rational evaluate(std::span<const BigInt> coeffs);

/// Folds a trailing 1 into its predecessor: [.., x, 1] -> [.., x+1].
ContinuedFraction normalize(const ContinuedFraction& cf);
Coeffs normalize(std::span<const BigInt> coeffs);

ConvergentMatrix matrix(std::span<const BigInt> coeffs);

/// All prefix values p_k/q_k, k = 1..n.
std::vector<Rational> convergents(std::span<const BigInt> coeffs);

/// Parses "1,2,4,2". Whitespace around entries is ignored.
Coeffs parse_coeffs(std::string_view text);

/// "1,2,4,2"
std::string format_coeffs(std::span<const BigInt> coeffs);

/// Convenience for literals in tests and examples.
Coeffs make_coeffs(std::initializer_list<long> values);

}  // namespace latsnake
