#include "latsnake/graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "latsnake/errors.hpp"

namespace latsnake {

namespace {

enum class Side : std::uint8_t { North, East, South, West };

std::size_t checked_total(std::span<const BigInt> coeffs) {
    BigInt total = 0;
    for (const BigInt& a : coeffs) total += a;
    if (total > BigInt(static_cast<unsigned long>(kMaxGeometryTiles + 1))) {
        throw CapExceeded("snake would have " + BigInt(total - 1).get_str() + " tiles; geometry is limited to " +
                          std::to_string(kMaxGeometryTiles) + " (use the closed-form counts instead)");
    }
    return total.get_ui();
}

std::vector<Sign> signs_from_runs(std::span<const BigInt> coeffs) {
    std::vector<Sign> out;
    out.reserve(checked_total(coeffs));
    Sign current = Sign::Plus;
    for (const BigInt& a : coeffs) {
        out.insert(out.end(), a.get_ui(), current);
        current = flip(current);
    }
    return out;
}

Coeffs runs_of(std::span<const Sign> signs) {
    Coeffs out;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (i > 0 && signs[i] == signs[i - 1]) {
            out.back() += 1;
        } else {
            out.emplace_back(1);
        }
    }
    return out;
}

// Lays tiles out from a sign sequence on e_0..e_d with the first tile entered
// through its west edge. Returns positions plus entry/exit sides per tile.
struct Layout {
    std::vector<Point> tiles;
    std::vector<Side> entry;
    std::vector<Side> exit;
};

Layout layout(std::span<const Sign> signs) {
    const std::size_t d = signs.size() - 1;
    Layout out;
    out.tiles.reserve(d);
    out.entry.reserve(d);
    out.exit.reserve(d);
    Point pos{0, 0};
    Side entry = Side::West;
    for (std::size_t i = 1; i <= d; ++i) {
        const bool turn = signs[i - 1] == signs[i];
        Side exit;
        if (entry == Side::West) {
            exit = turn ? Side::North : Side::East;
        } else {
            exit = turn ? Side::East : Side::North;
        }
        out.tiles.push_back(pos);
        out.entry.push_back(entry);
        out.exit.push_back(exit);
        if (exit == Side::East) {
            pos.x += 1;
            entry = Side::West;
        } else {
            pos.y += 1;
            entry = Side::South;
        }
    }
    return out;
}

// Sign of one side of a tile whose entry edge carries `entry_sign`.
Sign side_sign(Side entry, Sign entry_sign, Side side) {
    // North and west agree, south and east agree, north and south differ.
    const bool north_west = side == Side::North || side == Side::West;
    const bool entry_north_west = entry == Side::West;
    return north_west == entry_north_west ? entry_sign : flip(entry_sign);
}

std::pair<Point, Point> side_endpoints(Point tile, Side side) {
    const Point sw{tile.x, tile.y}, se{tile.x + 1, tile.y}, nw{tile.x, tile.y + 1}, ne{tile.x + 1, tile.y + 1};
    switch (side) {
        case Side::North: return {nw, ne};
        case Side::East: return {se, ne};
        case Side::South: return {sw, se};
        case Side::West: return {sw, nw};
    }
    return {sw, sw};
}

}  // namespace

Graph graph_of_tiles(std::span<const Point> tiles) {
    std::vector<Point> corners;
    corners.reserve(4 * tiles.size());
    for (const Point& t : tiles) {
        corners.push_back({t.x, t.y});
        corners.push_back({t.x + 1, t.y});
        corners.push_back({t.x, t.y + 1});
        corners.push_back({t.x + 1, t.y + 1});
    }
    std::sort(corners.begin(), corners.end());
    corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
    auto index = [&](Point p) {
        return static_cast<std::size_t>(std::lower_bound(corners.begin(), corners.end(), p) - corners.begin());
    };

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(4 * tiles.size());
    for (const Point& t : tiles) {
        for (Side side : {Side::North, Side::East, Side::South, Side::West}) {
            auto [p, q] = side_endpoints(t, side);
            std::size_t u = index(p), v = index(q);
            pairs.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    Graph g;
    g.vertex_count = corners.size();
    g.coords = std::move(corners);
    g.tile_count = tiles.size();
    g.edges.reserve(pairs.size());
    for (auto [u, v] : pairs) g.edges.push_back({u, v});
    return g;
}

namespace {

std::size_t vertex_at(const Graph& g, Point p) {
    auto it = std::lower_bound(g.coords.begin(), g.coords.end(), p);
    if (it == g.coords.end() || *it != p) throw InvariantViolation("glued corner is not a vertex of the snake");
    return static_cast<std::size_t>(it - g.coords.begin());
}

}  // namespace

Graph glue_band(const Graph& snake, Point first_sw, Point first_far, Point last_ne, Point last_other) {
    // Identified corners must have opposite checkerboard colours; with the
    // other pairing an odd band picks up two extra matchings.
    if ((first_sw.x + first_sw.y - last_ne.x - last_ne.y) % 2 == 0) std::swap(last_ne, last_other);
    const std::size_t sw = vertex_at(snake, first_sw);
    const std::size_t far = vertex_at(snake, first_far);
    const std::size_t ne = vertex_at(snake, last_ne);
    const std::size_t other = vertex_at(snake, last_other);
    if (sw == ne || far == other || sw == other || far == ne) {
        throw InvalidInput("a band needs at least two tiles");
    }

    std::vector<std::size_t> target(snake.vertex_count);
    std::iota(target.begin(), target.end(), std::size_t{0});
    target[ne] = sw;
    target[other] = far;

    std::vector<std::size_t> renumber(snake.vertex_count, 0);
    Graph out;
    out.tile_count = snake.tile_count;
    for (std::size_t v = 0; v < snake.vertex_count; ++v) {
        if (target[v] != v) continue;
        renumber[v] = out.vertex_count++;
        out.coords.push_back(snake.coords[v]);
    }

    const Edge glued{std::min(sw, far), std::max(sw, far)};
    bool dropped = false;
    std::vector<Edge> edges;
    for (const Edge& e : snake.edges) {
        if (!dropped && e == glued) {
            dropped = true;
            continue;
        }
        std::size_t u = renumber[target[e.u]], v = renumber[target[e.v]];
        edges.push_back({std::min(u, v), std::max(u, v)});
    }
    if (!dropped) throw InvariantViolation("glued edge missing from the snake");
    std::stable_sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
        return std::pair(x.u, x.v) < std::pair(y.u, y.v);
    });
    out.edges = std::move(edges);
    return out;
}

namespace {

Point north_east(Point tile) { return {tile.x + 1, tile.y + 1}; }

// The endpoint of a north/east side other than the north-east corner.
Point other_end(Point tile, Side side) { return side == Side::North ? Point{tile.x, tile.y + 1} : Point{tile.x + 1, tile.y}; }

void require_canonical(std::span<const BigInt> coeffs) {
    require_valid_coeffs(coeffs);
    if (coeffs.size() >= 2 && coeffs.back() == 1) {
        throw InvalidInput("last coefficient of " + format_coeffs(coeffs) +
                           " is 1; normalize it first (fold the trailing 1 into its predecessor)");
    }
    if (coeffs.size() == 1 && coeffs[0] < 2) throw InvalidInput("[1] has no tiles; a snake needs coefficients summing to >= 2");
}

}  // namespace

SnakeGraph SnakeGraph::from_coeffs(std::span<const BigInt> coeffs) {
    require_canonical(coeffs);
    SnakeGraph g;
    g.coeffs_.assign(coeffs.begin(), coeffs.end());
    g.signs_ = signs_from_runs(coeffs);
    Layout l = layout(g.signs_);
    g.steps_.reserve(l.exit.size() - 1);
    for (std::size_t i = 0; i + 1 < l.exit.size(); ++i) {
        g.steps_.push_back(l.exit[i] == Side::North ? Step::North : Step::East);
    }
    return g;
}

SnakeGraph SnakeGraph::from_steps(std::span<const Step> steps) {
    if (steps.size() + 1 > kMaxGeometryTiles) throw CapExceeded("too many tiles");
    SnakeGraph g;
    g.steps_.assign(steps.begin(), steps.end());
    g.signs_.reserve(steps.size() + 2);
    g.signs_.push_back(Sign::Plus);
    Side entry = Side::West;
    for (Step step : steps) {
        const Side exit = step == Step::North ? Side::North : Side::East;
        const bool turn = (entry == Side::West) == (exit == Side::North);
        g.signs_.push_back(turn ? g.signs_.back() : flip(g.signs_.back()));
        entry = exit == Side::North ? Side::South : Side::West;
    }
    g.signs_.push_back(g.signs_.back());
    g.coeffs_ = runs_of(g.signs_);
    return g;
}

std::vector<bool> SnakeGraph::interior_turns() const {
    std::vector<bool> out;
    const std::size_t d = tile_count();
    for (std::size_t i = 2; i + 1 <= d; ++i) out.push_back(signs_[i - 1] == signs_[i]);
    return out;
}

BandGraph::BandGraph(Coeffs cyclic_coeffs) : cyclic_coeffs_(std::move(cyclic_coeffs)) {
    require_valid_coeffs(cyclic_coeffs_);
    if (cyclic_coeffs_.size() % 2 != 0) {
        throw InvalidInput("band ~" + format_coeffs(cyclic_coeffs_) + " has an odd number of runs (" +
                           std::to_string(cyclic_coeffs_.size()) +
                           "); signs alternating around a cycle need an even number");
    }
}

std::size_t BandGraph::tile_count() const { return checked_total(cyclic_coeffs_); }

std::vector<Sign> BandGraph::signs() const { return signs_from_runs(cyclic_coeffs_); }

std::string BandGraph::str() const { return "~" + format_coeffs(cyclic_coeffs_); }

SnakeGraph snake_from_coeffs(std::span<const BigInt> coeffs) { return SnakeGraph::from_coeffs(coeffs); }

Coeffs cf_from_snake(const SnakeGraph& g) { return runs_of(g.signs()); }

std::vector<Point> tile_positions(const SnakeGraph& g) { return layout(g.signs()).tiles; }

Graph build_graph(const SnakeGraph& g) { return graph_of_tiles(tile_positions(g)); }

Graph build_graph(const BandGraph& b) {
    std::vector<Sign> signs = b.signs();
    const std::size_t d = signs.size();
    if (d < 2) throw InvalidInput("a band needs at least two tiles");
    signs.push_back(signs.front());  // the cut edge closes the cycle
    const Layout l = layout(signs);
    const Graph snake = graph_of_tiles(l.tiles);

    const Point first = l.tiles.front(), last = l.tiles.back();
    const Side exit = l.exit.back();
    const Sign exit_sign = side_sign(l.entry.back(), signs[d - 1], exit);
    const Sign west_sign = side_sign(Side::West, signs[0], Side::West);
    if (exit_sign != west_sign) {
        throw InvariantViolation("band " + b.str() + ": glued edges carry different signs");
    }
    return glue_band(snake, first, Point{first.x, first.y + 1}, north_east(last), other_end(last, exit));
}

Graph build_glued_graph(const SnakeGraph& g, Gluing gluing) {
    const std::vector<Sign>& signs = g.signs();
    const std::size_t d = g.tile_count();
    if (d < 2) throw InvalidInput("a single tile cannot be glued into a band");
    const Layout l = layout(signs);
    const Point first = l.tiles.front(), last = l.tiles.back();

    const Side first_side = gluing == Gluing::South ? Side::South : Side::West;
    const Sign glued_sign = side_sign(Side::West, signs[0], first_side);
    const Side last_side =
        side_sign(l.entry.back(), signs[d - 1], Side::North) == glued_sign ? Side::North : Side::East;
    const Point far = gluing == Gluing::South ? Point{first.x + 1, first.y} : Point{first.x, first.y + 1};
    return glue_band(graph_of_tiles(l.tiles), first, far, north_east(last), other_end(last, last_side));
}

Coeffs cyclic_runs(std::span<const Sign> signs) {
    const std::size_t n = signs.size();
    if (n == 0) return {};
    std::size_t start = 0;
    while (start < n && signs[(n - start - 1) % n] == signs[0]) ++start;
    if (start == n) return {BigInt(static_cast<unsigned long>(n))};
    std::vector<Sign> rotated;
    rotated.reserve(n);
    for (std::size_t k = 0; k < n; ++k) rotated.push_back(signs[(n - start + k) % n]);
    return runs_of(rotated);
}

BandGraph band_of_snake(const SnakeGraph& g, Gluing gluing) {
    const std::vector<Sign>& signs = g.signs();
    const std::size_t d = g.tile_count();
    const Side first_side = gluing == Gluing::South ? Side::South : Side::West;
    std::vector<Sign> cycle;
    cycle.reserve(d);
    cycle.push_back(side_sign(Side::West, signs[0], first_side));
    for (std::size_t i = 1; i < d; ++i) cycle.push_back(signs[i]);
    Coeffs runs = cyclic_runs(cycle);
    if (runs.size() == 1) {
        throw InvalidInput(std::string(gluing == Gluing::South ? "south" : "west") + " gluing of G[" +
                           format_coeffs(g.coeffs()) + "] gives every interior edge the same sign; no band results");
    }
    return BandGraph(std::move(runs));
}

std::pair<BandGraph, BandGraph> bands_of_snake(const SnakeGraph& g) {
    return {band_of_snake(g, Gluing::South), band_of_snake(g, Gluing::West)};
}

namespace {

struct MatchingSearch {
    const Graph& graph;
    std::vector<std::vector<std::size_t>> incident;
    std::vector<bool> covered;
    std::vector<std::size_t> chosen;

    explicit MatchingSearch(const Graph& g) : graph(g), incident(g.vertex_count), covered(g.vertex_count, false) {
        for (std::size_t id = 0; id < g.edges.size(); ++id) {
            const Edge& e = g.edges[id];
            if (e.u == e.v) continue;  // loops never belong to a matching
            incident[e.u].push_back(id);
            incident[e.v].push_back(id);
        }
    }

    template <typename Visit>
    void run(std::size_t from, Visit&& visit) {
        while (from < covered.size() && covered[from]) ++from;
        if (from == covered.size()) {
            visit(chosen);
            return;
        }
        covered[from] = true;
        for (std::size_t id : incident[from]) {
            const Edge& e = graph.edges[id];
            const std::size_t other = e.u == from ? e.v : e.u;
            if (covered[other]) continue;
            covered[other] = true;
            chosen.push_back(id);
            run(from + 1, visit);
            chosen.pop_back();
            covered[other] = false;
        }
        covered[from] = false;
    }
};

void check_cap(const Graph& graph, std::size_t edge_cap) {
    if (graph.edges.size() > edge_cap) {
        throw CapExceeded("graph has " + std::to_string(graph.edges.size()) + " edges; brute-force enumeration is capped at " +
                          std::to_string(edge_cap) + " (use the closed-form matching counts)");
    }
}

}  // namespace

std::vector<Matching> enumerate_matchings(const Graph& graph, std::size_t edge_cap) {
    check_cap(graph, edge_cap);
    std::vector<Matching> out;
    if (graph.vertex_count % 2 != 0) return out;
    MatchingSearch search(graph);
    search.run(0, [&](const std::vector<std::size_t>& chosen) {
        Matching m = chosen;
        std::sort(m.begin(), m.end());
        out.push_back(std::move(m));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_perfect_matchings(const Graph& graph, std::size_t edge_cap) {
    check_cap(graph, edge_cap);
    if (graph.vertex_count % 2 != 0) return 0;
    std::uint64_t count = 0;
    MatchingSearch search(graph);
    search.run(0, [&](const std::vector<std::size_t>&) { ++count; });
    return count;
}

bool is_perfect_matching(const Graph& graph, const Matching& m) {
    std::vector<int> hits(graph.vertex_count, 0);
    for (std::size_t id : m) {
        if (id >= graph.edges.size()) return false;
        const Edge& e = graph.edges[id];
        ++hits[e.u];
        if (e.v != e.u) ++hits[e.v];
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

SnakeCount count_snake_matchings(std::span<const BigInt> coeffs) {
    require_canonical(coeffs);
    ConvergentMatrix m = matrix(coeffs);
    return {std::move(m.p), std::move(m.q)};
}

BandCount count_band_matchings(std::span<const BigInt> cyclic_coeffs) {
    require_valid_coeffs(cyclic_coeffs);
    if (cyclic_coeffs.size() % 2 != 0) {
        throw InvalidInput("band ~" + format_coeffs(cyclic_coeffs) + " has an odd number of runs");
    }
    BandCount out;
    out.m = matrix(cyclic_coeffs);
    BigInt diff = out.m.p - out.m.s;
    out.D = diff * diff + 4 * out.m.r * out.m.q;
    out.matchings = out.m.p + out.m.s;
    if (out.matchings * out.matchings != out.D + 4) {
        throw InvariantViolation("(p+s)^2 != D+4 for band ~" + format_coeffs(cyclic_coeffs));
    }
    return out;
}

bool band_isomorphic(const BandGraph& b1, const BandGraph& b2) {
    const Coeffs& x = b1.cyclic_coeffs();
    const Coeffs& y = b2.cyclic_coeffs();
    const std::size_t n = x.size();
    if (y.size() != n) return false;
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool forward = true, backward = true;
        for (std::size_t i = 0; i < n && (forward || backward); ++i) {
            if (x[i] != y[(shift + i) % n]) forward = false;
            if (x[i] != y[(shift + n - i) % n]) backward = false;
        }
        if (forward || backward) return true;
    }
    return false;
}

bool snake_isomorphic(const SnakeGraph& g1, const SnakeGraph& g2) {
    if (g1.tile_count() != g2.tile_count()) return false;
    const std::vector<bool> t1 = g1.interior_turns();
    const std::vector<bool> t2 = g2.interior_turns();
    return t1 == t2 || std::equal(t1.begin(), t1.end(), t2.rbegin());
}

Coeffs parse_cyclic(std::string_view text) {
    if (!text.empty() && text.front() == '~') text.remove_prefix(1);
    return parse_coeffs(text);
}

}  // namespace latsnake
