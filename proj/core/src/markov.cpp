#include "latsnake/markov.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "latsnake/errors.hpp"

namespace latsnake {

bool is_markov_triple(const BigInt& x, const BigInt& y, const BigInt& z) {
    return x > 0 && y > 0 && z > 0 && x * x + y * y + z * z == 3 * x * y * z;
}

MarkovTriple::MarkovTriple(BigInt x, BigInt y, BigInt z) : m_{std::move(x), std::move(y), std::move(z)} {
    std::sort(m_.begin(), m_.end());
    if (!is_markov_triple(m_[0], m_[1], m_[2])) throw InvalidInput(str() + " is not a Markov triple");
}

std::string MarkovTriple::str() const {
    return "(" + m_[0].get_str() + "," + m_[1].get_str() + "," + m_[2].get_str() + ")";
}

MarkovTriple mutate(const MarkovTriple& t, int position) {
    if (position < 1 || position > 3) throw InvalidInput("mutation position must be 1, 2 or 3");
    const std::size_t i = static_cast<std::size_t>(position - 1);
    const BigInt& y = t[(i + 1) % 3];
    const BigInt& z = t[(i + 2) % 3];
    return {3 * y * z - t[i], y, z};
}

FareyIndex parse_farey(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) throw InvalidInput("expected a fraction b/a, got '" + std::string(text) + "'");
    const BigInt b = parse_bigint(text.substr(0, slash));
    const BigInt a = parse_bigint(text.substr(slash + 1));
    if (b <= 0 || a <= 0 || b > a) throw InvalidInput("fraction " + std::string(text) + " is not in (0, 1]");
    if (gcd(b, a) != 1) throw InvalidInput("fraction " + std::string(text) + " is not reduced");
    if (!a.fits_ulong_p()) throw InvalidInput("denominator too large");
    return {b.get_ui(), a.get_ui()};
}

MarkovTriple markov_triple(FareyIndex idx) {
    const std::uint64_t b = idx.b, a = idx.a;
    if (b == 0 || a == 0 || b > a) {
        throw InvalidInput(std::to_string(b) + "/" + std::to_string(a) + " is not in (0, 1]");
    }
    if (std::gcd(b, a) != 1) throw InvalidInput(std::to_string(b) + "/" + std::to_string(a) + " is not reduced");
    if (b == a) return {1, 1, 2};

    // Neighbours l < b/a < r with their Markov numbers; 0/1 carries m_0 = 1.
    std::uint64_t lb = 0, la = 1, rb = 1, ra = 1;
    BigInt ml = 1, mr = 2, opp = 1;
    for (;;) {
        const std::uint64_t mb = lb + rb, ma = la + ra;
        BigInt mm = 3 * ml * mr - opp;
        if (mb == b && ma == a) return {ml, mr, mm};
        const bool left = BigInt(b) * ma < BigInt(mb) * a;
        if (left) {
            opp = mr;
            rb = mb;
            ra = ma;
            mr = std::move(mm);
        } else {
            opp = ml;
            lb = mb;
            la = ma;
            ml = std::move(mm);
        }
    }
}

BigInt markov_number(FareyIndex idx) { return markov_triple(idx).max(); }

QuadraticIrrational lagrange_from_markov(const BigInt& m) {
    if (m < 1) throw InvalidInput("Markov number must be positive");
    return QuadraticIrrational::sqrt_over(9 * m * m - 4, m);
}

UniquenessReport uniqueness_scan(const BigInt& bound) {
    BigInt cap;
    mpz_ui_pow_ui(cap.get_mpz_t(), 10, kMaxScanDigits);
    if (bound > cap) throw CapExceeded("uniqueness_scan bound exceeds 10^" + std::to_string(kMaxScanDigits));

    UniquenessReport out;
    out.bound = bound;
    std::set<MarkovTriple> seen;
    std::deque<MarkovTriple> queue;
    const MarkovTriple root(1, 1, 1);
    if (bound >= 1) {
        seen.insert(root);
        queue.push_back(root);
    }
    while (!queue.empty()) {
        const MarkovTriple t = queue.front();
        queue.pop_front();
        for (int pos = 1; pos <= 3; ++pos) {
            MarkovTriple next = mutate(t, pos);
            if (next.max() > bound || seen.count(next)) continue;
            seen.insert(next);
            queue.push_back(std::move(next));
        }
    }
    out.triples.assign(seen.begin(), seen.end());
    std::vector<BigInt> all;
    for (const MarkovTriple& t : out.triples) all.push_back(t.max());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (i > 0 && all[i] == all[i - 1]) {
            if (out.duplicates.empty() || out.duplicates.back() != all[i]) out.duplicates.push_back(all[i]);
        } else {
            out.maxima.push_back(all[i]);
        }
    }
    return out;
}

}  // namespace latsnake
