#pragma once

// Snake graphs and band graphs.
//
// A snake graph is a chain of unit tiles, each glued north or east of the
// previous one. It is encoded by its sign sequence on the edges e_0..e_d
// (e_0 = west edge of the first tile, e_1..e_{d-1} the interior edges, e_d the
// north or east edge of the last tile carrying the same sign as e_{d-1}); the
// run lengths of that sequence are the continued-fraction coefficients
// [a_1, ..., a_n]. Inside a tile the north and west edges share a sign, as do
// the south and east edges, and north and south differ. Hence a tile goes
// straight when the signs of its entry and exit edges differ and turns when
// they agree.
//
// A band graph is a cyclic chain of tiles, encoded by the cyclic run lengths of
// its interior-edge signs.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latsnake/bigint.hpp"
#include "latsnake/contfrac.hpp"

namespace latsnake {

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Position of tile i+1 relative to tile i.
enum class Step : std::uint8_t { North, East };

/// Snakes longer than this many tiles are never materialised as geometry.
inline constexpr std::size_t kMaxGeometryTiles = 10'000'000;

class SnakeGraph {
public:
    /// From canonical coefficients (a_n >= 2, or n = 1 with a_1 >= 2).
    /// Throws InvalidInput for a trailing 1 (normalize first) or a single tile-less [1].
    static SnakeGraph from_coeffs(std::span<const BigInt> coeffs);

    /// From the tile directions; the sign sequence follows from the turn rule
    /// with the first tile entered through its west edge.
    static SnakeGraph from_steps(std::span<const Step> steps);

    const Coeffs& coeffs() const { return coeffs_; }
    /// d + 1 signs on e_0..e_d.
    const std::vector<Sign>& signs() const { return signs_; }
    /// d - 1 steps.
    const std::vector<Step>& steps() const { return steps_; }
    std::size_t tile_count() const { return signs_.size() - 1; }

    /// Turn pattern of the tiles strictly inside the snake (tiles 2..d-1). It
    /// is independent of the conventions fixing e_0 and e_d.
    std::vector<bool> interior_turns() const;

    friend bool operator==(const SnakeGraph& x, const SnakeGraph& y) { return x.coeffs_ == y.coeffs_; }

private:
    SnakeGraph() = default;

    Coeffs coeffs_;
    std::vector<Sign> signs_;
    std::vector<Step> steps_;
};

class BandGraph {
public:
    /// Throws InvalidInput unless the run count is even (and hence >= 2).
    explicit BandGraph(Coeffs cyclic_coeffs);

    const Coeffs& cyclic_coeffs() const { return cyclic_coeffs_; }
    std::size_t tile_count() const;

    /// Interior-edge signs around the band, starting with a run of '+'.
    std::vector<Sign> signs() const;

    /// "~4,4"
    std::string str() const;

    friend bool operator==(const BandGraph&, const BandGraph&) = default;

private:
    Coeffs cyclic_coeffs_;
};

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph. Edge ids are indices into `edges`.
struct Graph {
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;
    /// One representative lattice point per vertex (glued vertices keep the
    /// point of the first tile).
    std::vector<Point> coords;
    std::size_t tile_count = 0;
};

/// Sorted edge ids covering every vertex exactly once.
using Matching = std::vector<std::size_t>;

enum class Gluing { South, West };

SnakeGraph snake_from_coeffs(std::span<const BigInt> coeffs);

/// Run-length encoding of the sign sequence; inverse of snake_from_coeffs.
Coeffs cf_from_snake(const SnakeGraph& g);

/// Lower-left corners of the tiles, first tile at the origin.
std::vector<Point> tile_positions(const SnakeGraph& g);

/// Planar graph of the snake: 2d + 2 vertices, 3d + 1 edges.
Graph build_graph(const SnakeGraph& g);

/// Band graph from its cyclic coefficients: d tiles cut open at the first
/// interior edge, then closed up with glue_band. 2d vertices, 3d edges.
Graph build_graph(const BandGraph& b);

/// The band obtained from a snake by gluing the south (or west) edge of its
/// first tile to the edge of G^NE with the same sign.
Graph build_glued_graph(const SnakeGraph& g, Gluing gluing);

/// Both bands of a snake (south gluing first). Throws InvalidInput when a
/// gluing leaves every interior edge with the same sign (a one-run band),
/// which happens for the single-tile snake.
std::pair<BandGraph, BandGraph> bands_of_snake(const SnakeGraph& g);
BandGraph band_of_snake(const SnakeGraph& g, Gluing gluing);

/// Union of unit tiles with lower-left corners `tiles`. Vertices are numbered
/// in (x, y) order and edges in (u, v) order.
Graph graph_of_tiles(std::span<const Point> tiles);

/// Glues the edge {first_sw, first_far} of the first tile onto the edge
/// {last_ne, last_other} of the last and keeps a single copy of it. The pairing
/// of endpoints joins corners of opposite checkerboard colour. For an even
/// number of tiles that is south-west of the first tile onto north-east of the
/// last; for an odd number the endpoints are crossed.
Graph glue_band(const Graph& snake, Point first_sw, Point first_far, Point last_ne, Point last_other);

/// Brute-force perfect matchings, sorted lexicographically. Refuses graphs
/// with more than `edge_cap` edges.
std::vector<Matching> enumerate_matchings(const Graph& graph, std::size_t edge_cap = 64);

/// Same search without materialising the matchings.
std::uint64_t count_perfect_matchings(const Graph& graph, std::size_t edge_cap = 64);

/// True when `m` covers every vertex of `graph` exactly once.
bool is_perfect_matching(const Graph& graph, const Matching& m);

struct SnakeCount {
    BigInt matchings;       // |Match G[a_1..a_n]|
    BigInt tail_matchings;  // |Match G[a_2..a_n]| (1 for n = 1)
};

/// Closed form: numerator and denominator of [a_1, ..., a_n].
SnakeCount count_snake_matchings(std::span<const BigInt> coeffs);

struct BandCount {
    BigInt matchings;  // p + s
    ConvergentMatrix m;
    BigInt D;          // (p - s)^2 + 4 r q
};

/// Closed form p + s for an even-run cyclic sequence. Checks (p+s)^2 = D + 4
/// and throws InvariantViolation if it fails.
BandCount count_band_matchings(std::span<const BigInt> cyclic_coeffs);

/// Cyclic sequences equal up to rotation and reversal.
bool band_isomorphic(const BandGraph& b1, const BandGraph& b2);

/// Same tile count and same interior turn pattern, possibly reversed.
bool snake_isomorphic(const SnakeGraph& g1, const SnakeGraph& g2);

/// Cyclic run-length encoding starting at the run that contains index 0.
/// A constant sequence yields a single run.
Coeffs cyclic_runs(std::span<const Sign> signs);

/// Parses "~4,4" (the '~' is optional here).
Coeffs parse_cyclic(std::string_view text);

}  // namespace latsnake
