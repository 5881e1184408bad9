#pragma once

// Test-side reference computations. None of these call into the library; they
// use GMP's own rational and float types and deliberately naive algorithms.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

/// a_1 + 1/(a_2 + 1/(... + 1/a_n)), folded from the back.
inline mpq_class fold(const std::vector<long>& a) {
    mpq_class x = a.back();
    for (std::size_t i = a.size() - 1; i-- > 0;) {
        x = mpq_class(a[i]) + 1 / x;
        x.canonicalize();
    }
    return x;
}

struct Mat {
    mpz_class p = 1, r = 0, q = 0, s = 1;
};

/// Plain product of [[a,1],[1,0]] matrices.
inline Mat product(const std::vector<long>& a) {
    Mat m;
    for (long x : a) {
        Mat n;
        n.p = m.p * x + m.r;
        n.r = m.p;
        n.q = m.q * x + m.s;
        n.s = m.q;
        m = n;
    }
    return m;
}

/// All compositions of n (ordered lists of positive parts).
inline void compositions(int n, const std::function<void(const std::vector<long>&)>& visit) {
    std::vector<long> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            visit(cur);
            return;
        }
        for (int k = 1; k <= left; ++k) {
            cur.push_back(k);
            rec(left - k);
            cur.pop_back();
        }
    };
    rec(n);
}

/// Perfect matchings by include/exclude on the first uncovered vertex's edges,
/// over an explicit adjacency list.
inline std::uint64_t count_matchings(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    if (n % 2) return 0;
    std::vector<std::vector<std::size_t>> nbr(n);
    for (auto [u, v] : edges) {
        if (u == v) continue;
        nbr[u].push_back(v);
        nbr[v].push_back(u);
    }
    std::vector<char> used(n, 0);
    std::function<std::uint64_t()> rec = [&]() -> std::uint64_t {
        std::size_t v = 0;
        while (v < n && used[v]) ++v;
        if (v == n) return 1;
        used[v] = 1;
        std::uint64_t total = 0;
        for (std::size_t w : nbr[v]) {
            if (used[w]) continue;
            used[w] = 1;
            total += rec();
            used[w] = 0;
        }
        used[v] = 0;
        return total;
    };
    return rec();
}

/// Every word with a R's and b U's that stays weakly below the line from the
/// origin to (a,b), in lexicographic order.
inline std::vector<std::string> paths(unsigned a, unsigned b) {
    std::vector<std::string> out;
    std::string w(a, 'R');
    w.append(b, 'U');
    do {
        long x = 0, y = 0;
        bool ok = true;
        for (char c : w) {
            (c == 'R' ? x : y) += 1;
            if (y * static_cast<long>(a) > x * static_cast<long>(b)) ok = false;
        }
        if (ok) out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// Interior lattice points of the polygon bounded by the path and the
/// diagonal, by Pick's theorem: I = A - B/2 + 1 with B = a + b + 1.
inline long pick_interior(const std::string& w, unsigned a, unsigned b) {
    std::vector<std::pair<long, long>> poly{{0, 0}};
    long x = 0, y = 0;
    for (char c : w) {
        (c == 'R' ? x : y) += 1;
        poly.emplace_back(x, y);
    }
    long twice_area = 0;  // the diagonal closes the polygon back to (0,0)
    for (std::size_t i = 0; i < poly.size(); ++i) {
        auto [x1, y1] = poly[i];
        auto [x2, y2] = poly[(i + 1) % poly.size()];
        twice_area += x1 * y2 - x2 * y1;
    }
    twice_area = std::abs(twice_area);
    const long boundary = static_cast<long>(a + b) + 1;
    return (twice_area - boundary + 2) / 2;
}

/// Markov numbers up to `bound` by solving z^2 - 3xy z + x^2 + y^2 = 0 over
/// all x <= y <= bound. Quadratic in the bound; keep it small.
inline std::map<long, std::vector<std::array<long, 3>>> markov_triples_brute(long bound) {
    std::map<long, std::vector<std::array<long, 3>>> out;
    for (long x = 1; x <= bound; ++x) {
        for (long y = x; y <= bound; ++y) {
            mpz_class disc = mpz_class(9) * x * x * y * y - 4 * (mpz_class(x) * x + mpz_class(y) * y);
            if (disc < 0) continue;
            mpz_class root = sqrt(disc);
            if (root * root != disc) continue;
            for (int sgn : {-1, 1}) {
                mpz_class twice_z = mpz_class(3) * x * y + sgn * root;
                if (twice_z <= 0 || twice_z % 2 != 0) continue;
                mpz_class z = twice_z / 2;
                if (z < y || z > bound) continue;
                const long zz = z.get_si();
                auto& v = out[zz];
                std::array<long, 3> t{x, y, zz};
                if (std::find(v.begin(), v.end(), t) == v.end()) v.push_back(t);
            }
        }
    }
    return out;
}

/// High-precision float for numeric cross-checks.
inline mpf_class big_float(double x = 0) { return mpf_class(x, 1024); }

inline mpf_class sqrt_over(const mpz_class& d, const mpz_class& c) {
    mpf_class v(d, 1024);
    v = sqrt(v);
    return v / mpf_class(c, 1024);
}

}  // namespace oracle
