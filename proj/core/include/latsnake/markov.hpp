#pragma once

// Markov triples x^2 + y^2 + z^2 = 3xyz, the Markov tree indexed by the
// Stern-Brocot tree of fractions in (0, 1], and the Lagrange numbers below 3.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latsnake/bigint.hpp"
#include "latsnake/quadirr.hpp"

namespace latsnake {

/// Sorted ascending. Construction checks the Markov equation.
class MarkovTriple {
public:
    MarkovTriple(BigInt x, BigInt y, BigInt z);

    const BigInt& operator[](std::size_t i) const { return m_[i]; }
    const BigInt& max() const { return m_[2]; }
    std::string str() const;  // "(1,2,5)"

    friend bool operator==(const MarkovTriple&, const MarkovTriple&) = default;
    friend bool operator<(const MarkovTriple& x, const MarkovTriple& y) { return x.m_ < y.m_; }

private:
    std::array<BigInt, 3> m_;
};

bool is_markov_triple(const BigInt& x, const BigInt& y, const BigInt& z);

/// Replaces entry `position` (1..3 in sorted order) by 3yz - x.
MarkovTriple mutate(const MarkovTriple& t, int position);

/// The fraction b/a in (0, 1], reduced.
struct FareyIndex {
    std::uint64_t b = 1;
    std::uint64_t a = 1;
};

/// Parses "b/a"; throws InvalidInput outside (0, 1] or when not reduced.
FareyIndex parse_farey(std::string_view text);

/// Triple reached by walking the Stern-Brocot tree to b/a: 1/1 gives
/// (1,1,2) and every mediant b/a of neighbours l, r gives
/// m = 3 m_l m_r - m_opp, where m_opp belongs to the fraction the mediant
/// replaces. The triple is (m_l, m_r, m).
MarkovTriple markov_triple(FareyIndex idx);

/// max of markov_triple(idx); m_{1/1} = 2.
BigInt markov_number(FareyIndex idx);

/// sqrt(9m^2 - 4) / m.
QuadraticIrrational lagrange_from_markov(const BigInt& m);

inline constexpr unsigned kMaxScanDigits = 200;

struct UniquenessReport {
    BigInt bound;
    std::vector<MarkovTriple> triples;  // sorted
    std::vector<BigInt> maxima;         // sorted, distinct
    std::vector<BigInt> duplicates;     // maxima shared by two triples
};

/// Breadth-first search of the Markov tree from (1,1,1), keeping triples with
/// max <= bound. Refuses bounds above 10^kMaxScanDigits.
UniquenessReport uniqueness_scan(const BigInt& bound);

}  // namespace latsnake
