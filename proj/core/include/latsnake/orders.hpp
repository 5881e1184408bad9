#pragma once

// The strict orders <_M and <_L on lattice paths and the scans built on them.
// Everything is compared exactly; decimals only appear in reports.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latsnake/bigint.hpp"
#include "latsnake/contfrac.hpp"
#include "latsnake/paths.hpp"
#include "latsnake/quadirr.hpp"

namespace latsnake {

struct PathRecord {
    LatticePath path;
    Coeffs coeffs;  // cf_from_path, unnormalized
    BigInt m;
    LagrangeData l;
    bool christoffel = false;
};

PathRecord make_record(const LatticePath& p);

/// Records for all of D(a,b) in lexicographic order, computed on `threads`
/// workers (0 = hardware concurrency). The result does not depend on the
/// thread count.
std::vector<PathRecord> compute_records(std::uint32_t a, std::uint32_t b, std::uint32_t max_total,
                                        unsigned threads = 0);

/// Records for every D(a,b) with 3 <= a+b <= max_total, ordered by (a+b, a)
/// and then lexicographically.
std::vector<PathRecord> compute_all_records(std::uint32_t max_total, unsigned threads = 0);

std::strong_ordering compare_m(const LatticePath& x, const LatticePath& y);
std::strong_ordering compare_l(const LatticePath& x, const LatticePath& y);

/// Positions into the record list.
struct Extremes {
    std::vector<std::size_t> min_m, max_m, min_l, max_l;
};

Extremes extremes(const std::vector<PathRecord>& records);

/// Dense rank of each record's L (0 = smallest); equal L gives equal rank.
std::vector<std::size_t> l_ranks(const std::vector<PathRecord>& records);

struct MCollision {
    std::size_t i = 0, j = 0;
    bool snakes_isomorphic = false;
};

struct LCollision {
    std::size_t i = 0, j = 0;
    bool bands_isomorphic = false;
};

struct CollisionReport {
    std::vector<MCollision> m;
    std::vector<LCollision> l;
};

/// All unordered pairs i < j with equal M, and with equal L.
CollisionReport collision_scan(const std::vector<PathRecord>& records);

struct MonotonicityReport {
    std::size_t pairs_checked = 0;
    // 4(a): L(x) < L(y) but M(x) > M(y). Stored as (x, y).
    std::vector<std::pair<std::size_t, std::size_t>> violations_a;
    // 4(b): M(x) < M(y) but L(x) > L(y).
    std::vector<std::pair<std::size_t, std::size_t>> violations_b;
};

/// Checks every pair of records, so passing compute_all_records compares
/// across endpoints as well.
MonotonicityReport monotonicity_scan(const std::vector<PathRecord>& records);

struct SwapPair {
    std::size_t ru = 0;  // record with ...RU... at `position`
    std::size_t ur = 0;  // record with ...UR... at `position`
    std::size_t position = 0;
    std::strong_ordering m_order = std::strong_ordering::equal;  // ru vs ur
    std::strong_ordering l_order = std::strong_ordering::equal;
    bool m_cover = false;  // adjacent levels of <_M
    bool l_cover = false;
};

struct CoverReport {
    std::vector<SwapPair> swaps;
    // Cover pairs (lower, upper) of each finite poset.
    std::vector<std::pair<std::size_t, std::size_t>> m_covers;
    std::vector<std::pair<std::size_t, std::size_t>> l_covers;
};

/// Records must come from a single D(a,b).
CoverReport cover_scan(const std::vector<PathRecord>& records);

struct SupReport {
    std::uint32_t max_total = 0;
    std::size_t paths = 0;
    std::size_t argmax = 0;  // into records
    std::size_t argmin = 0;
    QuadraticIrrational bound;  // 1 + sqrt(5)
    int gap_sign = 0;           // sign of max L - bound
    bool all_at_least_sqrt5 = true;
};

SupReport sup_scan(const std::vector<PathRecord>& records, std::uint32_t max_total);

inline constexpr unsigned kMaxLimitDemoK = 40;

struct LimitSample {
    std::size_t position = 0;  // 0-based index into the coefficients
    Rational value;            // [a_n, ...] + [0, a_{n-1}, ..., a_1]
};

struct LimitReport {
    unsigned k = 0;
    std::string word;  // R^2 U R^3 U ... R^{k+1} U
    Coeffs coeffs;
    std::vector<LimitSample> samples;  // one per coefficient equal to 2
    Rational global_sup;
    Rational tail_sup;  // over the second half of the samples
    // The two ways a sample window can settle: [2,1,1,...] + [0,2,1,1,...]
    // and [2,2,1,1,...] + [0,1,1,...]. Both sums are exactly 3.
    QuadraticIrrational limit_left, limit_right, limit_sum;
    QuadraticIrrational alt_left, alt_right, alt_sum;
};

/// Two-sided sums at every 2 in the coefficients of R^2 U R^3 U ... R^{k+1} U.
/// The tail supremum estimates the lim sup, which is the Lagrange number of
/// the infinite path; the leading samples carry start-up effects.
LimitReport limit_demo(unsigned k);

struct AxiomReport {
    std::size_t triples_checked = 0;
    bool m_ok = true;
    bool l_ok = true;
};

/// Irreflexivity, asymmetry and transitivity of both relations on `records`.
AxiomReport check_order_axioms(const std::vector<PathRecord>& records);

}  // namespace latsnake
