#pragma once

#include <compare>
#include <span>
#include <string>

#include "latsnake/bigint.hpp"
#include "latsnake/contfrac.hpp"

namespace latsnake {

/// Exact real number (a + b*sqrt(d)) / c.
///
/// Canonical form: d is squarefree (square factors moved into b), c >= 1,
/// gcd(a, b, c) = 1, and a value with no irrational part has b = d = 0. In
/// canonical form two values are equal exactly when their fields are equal.
///
/// Radicands whose factorisation exceeds the trial-division budget are kept
/// as given and flagged; equality then goes through compare().
class QuadraticIrrational {
public:
    QuadraticIrrational() = default;
    QuadraticIrrational(const Rational& x);  // NOLINT(google-explicit-constructor)
    QuadraticIrrational(BigInt a, BigInt b, BigInt d, BigInt c);

    static QuadraticIrrational from_integer(const BigInt& n) { return {n, 0, 0, 1}; }
    /// sqrt(d) / c
    static QuadraticIrrational sqrt_over(const BigInt& d, const BigInt& c) { return {0, 1, d, c}; }

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& d() const { return d_; }
    const BigInt& c() const { return c_; }

    bool is_rational() const { return b_ == 0; }
    /// False only for a radicand that could not be fully reduced.
    bool is_canonical() const { return canonical_; }

    /// Text form such as "2+sqrt(5)", "(7+sqrt(621))/22", "sqrt(221)/5", "17/4".
    std::string str() const;

    double to_double() const;

    QuadraticIrrational operator-() const;

    friend QuadraticIrrational operator+(const QuadraticIrrational& x, const QuadraticIrrational& y);
    friend QuadraticIrrational operator-(const QuadraticIrrational& x, const QuadraticIrrational& y);
    friend QuadraticIrrational operator*(const QuadraticIrrational& x, const QuadraticIrrational& y);
    friend QuadraticIrrational operator/(const QuadraticIrrational& x, const QuadraticIrrational& y);

    friend bool operator==(const QuadraticIrrational& x, const QuadraticIrrational& y);
    friend std::strong_ordering operator<=>(const QuadraticIrrational& x, const QuadraticIrrational& y);

private:
    void canonicalize();

    BigInt a_ = 0;
    BigInt b_ = 0;
    BigInt d_ = 0;
    BigInt c_ = 1;
    bool canonical_ = true;
};

/// Sign (-1, 0, +1) of A + B*sqrt(d), d >= 0, using one squaring.
int sign_of(const BigInt& A, const BigInt& B, const BigInt& d);

/// Sign of A + B*sqrt(d1) + C*sqrt(d2) using at most two squarings.
int sign_of(const BigInt& A, const BigInt& B, const BigInt& d1, const BigInt& C, const BigInt& d2);

/// Exact ordering by integer sign analysis; never touches floating point.
std::strong_ordering compare(const QuadraticIrrational& x, const QuadraticIrrational& y);

/// (a + b sqrt d)/c -> (a - b sqrt d)/c
QuadraticIrrational conjugate(const QuadraticIrrational& x);

/// D = (p - s)^2 + 4 r q for the convergent matrix of `period`. Invariant under
/// rotation of the period.
BigInt radicand(std::span<const BigInt> period);

/// Value of the purely periodic continued fraction [period, period, ...]:
/// (p - s + sqrt(D)) / (2 q).
QuadraticIrrational from_periodic(std::span<const BigInt> period);

/// Value of [prefix, period, period, ...]. A leading 0 in `prefix` is allowed
/// and denotes the reciprocal of the rest.
QuadraticIrrational from_eventually_periodic(std::span<const BigInt> prefix, std::span<const BigInt> period);

/// Decimal expansion with `digits` places after the point, computed with
/// integer square roots only. Truncates toward zero unless `round_nearest`,
/// which rounds half away from zero.
std::string to_decimal(const QuadraticIrrational& x, unsigned digits, bool round_nearest = false);

/// floor((A + B*sqrt(d)) / C) for C > 0.
BigInt floor_of(const BigInt& A, const BigInt& B, const BigInt& d, const BigInt& C);

}  // namespace latsnake
