#include "latsnake/paths.hpp"

#include <algorithm>
#include <numeric>

#include "latsnake/errors.hpp"

namespace latsnake {

namespace {

// Enumeration tables use uint64 counts; C(60,30)/60 still fits.
constexpr std::uint32_t kMaxIndexTotal = 60;

bool below_diagonal(std::uint64_t i, std::uint64_t j, std::uint32_t a, std::uint32_t b) {
    return j * a <= i * b;
}

}  // namespace

void require_endpoint(std::uint32_t a, std::uint32_t b) {
    if (b == 0 || b >= a) {
        throw InvalidInput("endpoint (" + std::to_string(a) + "," + std::to_string(b) + ") needs 0 < b < a");
    }
    if (std::gcd(a, b) != 1) {
        throw InvalidInput("endpoint (" + std::to_string(a) + "," + std::to_string(b) + ") is not coprime");
    }
}

LatticePath::LatticePath(std::string word, std::uint32_t a, std::uint32_t b)
    : word_(std::move(word)), a_(a), b_(b) {
    require_endpoint(a, b);
    std::uint64_t i = 0, j = 0;
    for (std::size_t k = 0; k < word_.size(); ++k) {
        const char c = word_[k];
        if (c == 'R') {
            ++i;
        } else if (c == 'U') {
            ++j;
        } else {
            throw InvalidInput("path contains '" + std::string(1, c) + "' at position " + std::to_string(k) +
                               "; only R and U are allowed");
        }
        if (i > a || j > b) {
            throw InvalidInput("path " + word_ + " overshoots (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
        if (!below_diagonal(i, j, a, b)) {
            throw InvalidInput("prefix " + word_.substr(0, k + 1) + " ends at (" + std::to_string(i) + "," +
                               std::to_string(j) + "), above the diagonal to (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
        }
    }
    if (i != a || j != b) {
        throw InvalidInput("path " + word_ + " ends at (" + std::to_string(i) + "," + std::to_string(j) +
                           ") instead of (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
}

LatticePath validate_path(std::string_view word, std::uint32_t a, std::uint32_t b) {
    return LatticePath(std::string(word), a, b);
}

LatticePath parse_path(std::string_view word) {
    const auto a = static_cast<std::uint32_t>(std::count(word.begin(), word.end(), 'R'));
    const auto b = static_cast<std::uint32_t>(std::count(word.begin(), word.end(), 'U'));
    return LatticePath(std::string(word), a, b);
}

BigInt path_count(std::uint32_t a, std::uint32_t b) {
    require_endpoint(a, b);
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), a + b, a);
    return c / (a + b);
}

PathIndex::PathIndex(std::uint32_t a, std::uint32_t b, std::uint32_t max_total) : a_(a), b_(b) {
    require_endpoint(a, b);
    const std::uint32_t cap = std::min(max_total, kMaxIndexTotal);
    if (a + b > cap) {
        throw CapExceeded("D(" + std::to_string(a) + "," + std::to_string(b) + ") has " + path_count(a, b).get_str() +
                          " paths; a+b = " + std::to_string(a + b) + " exceeds the cap " + std::to_string(cap));
    }
    completions_.assign(static_cast<std::size_t>(a + 1) * (b + 1), 0);
    for (std::uint32_t i = a + 1; i-- > 0;) {
        for (std::uint32_t j = b + 1; j-- > 0;) {
            if (!below_diagonal(i, j, a, b)) continue;
            std::uint64_t n = (i == a && j == b) ? 1 : 0;
            if (i < a) n += completions(i + 1, j);
            if (j < b && below_diagonal(i, j + 1, a, b)) n += completions(i, j + 1);
            completions_[static_cast<std::size_t>(i) * (b + 1) + j] = n;
        }
    }
    size_ = completions(0, 0);
}

std::uint64_t PathIndex::completions(std::uint32_t i, std::uint32_t j) const {
    return completions_[static_cast<std::size_t>(i) * (b_ + 1) + j];
}

LatticePath PathIndex::at(std::uint64_t index) const {
    if (index >= size_) throw InvalidInput("path index " + std::to_string(index) + " out of range");
    std::string word;
    word.reserve(a_ + b_);
    std::uint32_t i = 0, j = 0;
    while (i < a_ || j < b_) {
        const std::uint64_t via_r = i < a_ ? completions(i + 1, j) : 0;
        if (index < via_r) {
            word += 'R';
            ++i;
        } else {
            index -= via_r;
            word += 'U';
            ++j;
        }
    }
    return LatticePath(std::move(word), a_, b_);
}

std::vector<LatticePath> PathIndex::range(std::uint64_t first, std::uint64_t last) const {
    last = std::min(last, size_);
    std::vector<LatticePath> out;
    if (first >= last) return out;
    out.reserve(last - first);
    for (std::uint64_t k = first; k < last; ++k) out.push_back(at(k));
    return out;
}

std::vector<LatticePath> enumerate_paths(std::uint32_t a, std::uint32_t b, std::uint32_t max_total) {
    PathIndex index(a, b, max_total);
    return index.range(0, index.size());
}

LatticePath christoffel(std::uint32_t a, std::uint32_t b) {
    require_endpoint(a, b);
    std::string word;
    std::uint64_t i = 0, j = 0;
    while (i < a || j < b) {
        if (j < b && below_diagonal(i, j + 1, a, b)) {
            word += 'U';
            ++j;
        } else {
            word += 'R';
            ++i;
        }
    }
    return LatticePath(std::move(word), a, b);
}

bool is_christoffel(const LatticePath& p) { return p == christoffel(p.a(), p.b()); }

Coeffs cf_from_path(std::string_view word) {
    if (word.size() < 2) throw InvalidInput("a path needs at least two steps");
    Coeffs out;
    out.reserve(2 * word.size());
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
        if (word[k] == word[k + 1]) {
            out.emplace_back(1);
            out.emplace_back(1);
        } else {
            out.emplace_back(2);
        }
    }
    return out;
}

Coeffs cf_from_path(const LatticePath& p) { return cf_from_path(p.word()); }

SnakeGraph snake_of_path(const LatticePath& p) { return SnakeGraph::from_coeffs(normalize(cf_from_path(p))); }

BandGraph band_of_path(const LatticePath& p) {
    Coeffs c{BigInt(2)};
    Coeffs tail = cf_from_path(p);
    c.insert(c.end(), tail.begin(), tail.end());
    if (c.size() % 2 != 0) throw InvariantViolation("band of path " + p.word() + " has an odd number of runs");
    return BandGraph(std::move(c));
}

std::vector<Point> path_tiles(const LatticePath& p) {
    std::vector<Point> cells;
    auto add = [&](Point c) {
        if (cells.empty() || cells.back() != c) cells.push_back(c);
    };
    std::int64_t x = 0, y = 0;
    char prev = 0;
    for (char st : p.word()) {
        if (st == 'R') {
            if (prev == 'U') add({2 * x - 1, 2 * y});
            add({2 * x, 2 * y});
            add({2 * x + 1, 2 * y});
            ++x;
        } else {
            add({2 * x - 1, 2 * y});
            add({2 * x - 1, 2 * y + 1});
            ++y;
        }
        prev = st;
    }
    return cells;
}

SnakeGraph snake_of_path_geometric(const LatticePath& p) {
    const std::vector<Point> cells = path_tiles(p);
    if (cells.size() < 3) throw InvalidInput("path " + p.word() + " is too short for a snake");
    std::vector<Step> steps;
    for (std::size_t k = 2; k + 1 < cells.size(); ++k) {
        const Point from = cells[k - 1], to = cells[k];
        if (to.x == from.x + 1 && to.y == from.y) {
            steps.push_back(Step::East);
        } else if (to.x == from.x && to.y == from.y + 1) {
            steps.push_back(Step::North);
        } else {
            throw InvariantViolation("path tiles of " + p.word() + " are not a snake");
        }
    }
    return SnakeGraph::from_steps(steps);
}

Graph band_graph_of_path_geometric(const LatticePath& p) {
    std::vector<Point> cells = path_tiles(p);
    const Point top{cells.back().x, cells.back().y + 1};
    cells.push_back(top);
    const Point first = cells.front();
    return glue_band(graph_of_tiles(cells), first, Point{first.x, first.y + 1}, Point{top.x + 1, top.y + 1},
                     Point{top.x + 1, top.y});
}

BigInt m_of_path(const LatticePath& p) { return evaluate(cf_from_path(p)).num(); }

LagrangeData lagrange_of_path(const LatticePath& p) {
    Coeffs c{BigInt(2)};
    Coeffs tail = cf_from_path(p);
    c.insert(c.end(), tail.begin(), tail.end());
    const std::size_t n = c.size();

    LagrangeData out;
    Coeffs rotated(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) rotated[i] = c[(k + i) % n];
        const ConvergentMatrix m = matrix(rotated);
        const BigInt diff = m.p - m.s;
        const BigInt D = diff * diff + 4 * m.r * m.q;
        if (k == 0) {
            out.D = D;
            out.q_min = m.q;
        } else {
            if (D != out.D) throw InvariantViolation("radicand changes under rotation for path " + p.word());
            if (m.q < out.q_min) {
                out.q_min = m.q;
                out.argmin_rotation = k;
            }
        }
    }
    out.value = QuadraticIrrational::sqrt_over(out.D, out.q_min);
    return out;
}

QuadraticIrrational l_of_path(const LatticePath& p) { return lagrange_of_path(p).value; }

std::uint64_t lattice_points_between(const LatticePath& p) {
    const std::uint64_t a = p.a(), b = p.b();
    std::vector<std::uint64_t> top(a + 1, 0);
    std::uint64_t x = 0, y = 0;
    for (char st : p.word()) {
        if (st == 'R') {
            ++x;
        } else {
            ++y;
        }
        top[x] = std::max(top[x], y);
    }
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i <= a; ++i) total += i * b / a - top[i];
    return total;
}

}  // namespace latsnake
