#pragma once

// Lattice paths from (0,0) to (a,b) with unit steps R = (1,0) and U = (0,1)
// that never go above the diagonal, 0 < b < a, gcd(a,b) = 1. Each path gets a
// snake graph and a band graph, and through them two statistics: the matching
// number M (perfect matchings of the snake) and the Lagrange number L of the
// periodic continued fraction read off the band.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latsnake/bigint.hpp"
#include "latsnake/contfrac.hpp"
#include "latsnake/graphs.hpp"
#include "latsnake/quadirr.hpp"

namespace latsnake {

class LatticePath {
public:
    /// Validates against D(a,b); throws InvalidInput naming the first prefix
    /// that crosses the diagonal.
    LatticePath(std::string word, std::uint32_t a, std::uint32_t b);

    const std::string& word() const { return word_; }
    std::uint32_t a() const { return a_; }
    std::uint32_t b() const { return b_; }
    std::size_t size() const { return word_.size(); }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
    friend auto operator<=>(const LatticePath& x, const LatticePath& y) { return x.word_ <=> y.word_; }

private:
    std::string word_;
    std::uint32_t a_;
    std::uint32_t b_;
};

LatticePath validate_path(std::string_view word, std::uint32_t a, std::uint32_t b);

/// Reads the endpoint off the step counts.
LatticePath parse_path(std::string_view word);

/// Throws InvalidInput unless 0 < b < a and gcd(a, b) = 1.
void require_endpoint(std::uint32_t a, std::uint32_t b);

/// |D(a,b)| = C(a+b, a) / (a+b) for coprime a, b.
BigInt path_count(std::uint32_t a, std::uint32_t b);

/// Paths of D(a,b) in lexicographic order (R < U); throws CapExceeded when
/// a + b > max_total.
std::vector<LatticePath> enumerate_paths(std::uint32_t a, std::uint32_t b, std::uint32_t max_total);

/// Stateless random access into the lexicographic enumeration, so a range of
/// indices can be generated independently of the rest.
class PathIndex {
public:
    PathIndex(std::uint32_t a, std::uint32_t b, std::uint32_t max_total);

    std::uint64_t size() const { return size_; }
    LatticePath at(std::uint64_t index) const;
    std::vector<LatticePath> range(std::uint64_t first, std::uint64_t last) const;

private:
    std::uint64_t completions(std::uint32_t i, std::uint32_t j) const;

    std::uint32_t a_;
    std::uint32_t b_;
    std::uint64_t size_ = 0;
    // completions_[i * (b+1) + j]: number of ways to finish from (i, j).
    std::vector<std::uint64_t> completions_;
};

/// Greedy lower Christoffel word: step up whenever that stays weakly below
/// the diagonal.
LatticePath christoffel(std::uint32_t a, std::uint32_t b);

bool is_christoffel(const LatticePath& p);

/// Pair rule over consecutive steps: RR and UU give 1,1; RU and UR give 2.
/// The result may end in 1 (paths ending UU).
Coeffs cf_from_path(std::string_view word);
Coeffs cf_from_path(const LatticePath& p);

/// G(path) = G[normalize(cf_from_path)].
SnakeGraph snake_of_path(const LatticePath& p);

/// Band G[~2, a_1, ..., a_n] with the unnormalized a_i.
BandGraph band_of_path(const LatticePath& p);

/// Half-size tiles laid along the path on its diagonal side, in doubled
/// coordinates: one tile per step plus shared tiles at the corners.
std::vector<Point> path_tiles(const LatticePath& p);

/// G(path) built directly from path_tiles by dropping the first and last tile.
SnakeGraph snake_of_path_geometric(const LatticePath& p);

/// Band built from path_tiles plus a tile on top of the last one, with the
/// west edge of the first tile glued to the east edge of the top tile.
Graph band_graph_of_path_geometric(const LatticePath& p);

/// M(path): numerator of [cf_from_path].
BigInt m_of_path(const LatticePath& p);

struct LagrangeData {
    QuadraticIrrational value;  // sqrt(D) / q_min
    BigInt D;
    BigInt q_min;
    std::size_t argmin_rotation = 0;  // first rotation attaining q_min
};

/// L(path) = max over rotations alpha of [~2, a_1..a_n] of alpha - alpha'.
/// Every rotation shares the radicand D and alpha - alpha' = sqrt(D)/q, so the
/// maximum sits at the smallest lower-left convergent entry q.
LagrangeData lagrange_of_path(const LatticePath& p);
QuadraticIrrational l_of_path(const LatticePath& p);

/// Lattice points strictly above the path and on or below the diagonal. No
/// interior lattice point lies on the diagonal when gcd(a,b) = 1, so this is
/// the count strictly between the two.
std::uint64_t lattice_points_between(const LatticePath& p);

}  // namespace latsnake
