// Acceptance criteria, one PASS/FAIL line each. Derived values come from the
// oracles in oracles.hpp and perron.hpp; the library is only the system under
// test.
//
// Usage: acceptance [--expect-fail N]...
// Exit status is 0 when the failing criteria are exactly the expected ones.

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "latsnake/errors.hpp"
#include "latsnake/graphs.hpp"
#include "latsnake/markov.hpp"
#include "latsnake/orders.hpp"
#include "latsnake/paths.hpp"
#include "oracles.hpp"
#include "perron.hpp"

using namespace latsnake;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::string failed;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failed += " [failed: " + what + "]";
        }
    }
};

Coeffs to_coeffs(const std::vector<long>& v) {
    Coeffs c;
    for (long x : v) c.emplace_back(x);
    return c;
}

bool same(const Rational& r, const mpq_class& q) { return r.num() == q.get_num() && r.den() == q.get_den(); }

std::vector<std::pair<std::size_t, std::size_t>> edge_pairs(const Graph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const Edge& e : g.edges) out.emplace_back(e.u, e.v);
    return out;
}

using Q = QuadraticIrrational;

template <typename F>
void for_each_endpoint(std::uint32_t max_total, F&& f) {
    for (std::uint32_t total = 3; total <= max_total; ++total) {
        for (std::uint32_t a = total / 2 + 1; a < total; ++a) {
            if (std::gcd(a, total - a) == 1) f(a, total - a);
        }
    }
}

void c1(Outcome& o) {
    const std::vector<std::pair<std::vector<long>, mpq_class>> cases{
        {{1, 2, 4, 2}, mpq_class(29, 20)},
        {{4, 4}, mpq_class(17, 4)},
        {{1, 2, 4}, mpq_class(13, 9)},
        {{1, 2, 4, 1}, mpq_class(16, 11)}};
    for (const auto& [v, expected] : cases) {
        const Rational got = evaluate(to_coeffs(v));
        o.require(same(got, expected) && same(got, oracle::fold(v)), "[" + format_coeffs(to_coeffs(v)) + "] = " + got.str());
    }
    o.detail << "29/20, 17/4, 13/9, 16/11 exact";
}

void c2(Outcome& o) {
    const Coeffs fig1 = make_coeffs({1, 2, 4, 2});
    const Graph g = build_graph(SnakeGraph::from_coeffs(fig1));
    const auto ms = enumerate_matchings(g);
    bool all_perfect = true;
    for (const Matching& m : ms) all_perfect = all_perfect && is_perfect_matching(g, m);
    o.require(ms.size() == 29 && all_perfect && std::set<Matching>(ms.begin(), ms.end()).size() == 29,
              "G[1,2,4,2] has " + std::to_string(ms.size()) + " matchings");
    o.require(count_snake_matchings(fig1).matchings == 29, "closed-form numerator");

    std::size_t cases = 0, bad = 0;
    for (int n = 2; n <= 14; ++n) {
        oracle::compositions(n, [&](const std::vector<long>& v) {
            if (v.size() >= 2 && v.back() == 1) return;
            const Graph graph = build_graph(SnakeGraph::from_coeffs(to_coeffs(v)));
            const mpz_class expected = oracle::fold(v).get_num();
            const auto brute = count_perfect_matchings(graph);
            const auto independent = oracle::count_matchings(graph.vertex_count, edge_pairs(graph));
            if (mpz_class(static_cast<unsigned long>(brute)) != expected || brute != independent ||
                count_snake_matchings(to_coeffs(v)).matchings != expected) {
                ++bad;
            }
            ++cases;
        });
    }
    o.require(bad == 0, std::to_string(bad) + " disagreements");
    o.detail << "G[1,2,4,2] -> 29 matchings; " << cases << " canonical lists with sum <= 14 agree";
}

void c3(Outcome& o) {
    const BandCount a = count_band_matchings(make_coeffs({4, 4}));
    const BandCount b = count_band_matchings(make_coeffs({1, 2, 4, 1}));
    o.require(a.matchings == 18 && a.D == 320, "[~4,4]");
    o.require(b.matchings == 25 && b.D == 621, "[~1,2,4,1]");
    std::size_t cases = 0, bad = 0;
    for (int n = 2; n <= 14; ++n) {
        oracle::compositions(n, [&](const std::vector<long>& v) {
            if (v.size() % 2) return;
            const oracle::Mat m = oracle::product(v);
            const mpz_class ps = m.p + m.s;
            const mpz_class D = (m.p - m.s) * (m.p - m.s) + 4 * m.r * m.q;
            const BandCount c = count_band_matchings(to_coeffs(v));
            const auto brute = count_perfect_matchings(build_graph(BandGraph(to_coeffs(v))));
            if (c.matchings != ps || c.D != D || ps * ps != D + 4 || mpz_class(static_cast<unsigned long>(brute)) != ps) {
                ++bad;
            }
            ++cases;
        });
    }
    o.require(bad == 0, std::to_string(bad) + " disagreements");
    o.detail << "[~4,4] -> 18 (D=320), [~1,2,4,1] -> 25 (D=621); " << cases
             << " bands with sum <= 14: brute force = p+s and (p+s)^2 = D+4";
}

void c4(Outcome& o) {
    const auto [south, west] = bands_of_snake(SnakeGraph::from_coeffs(make_coeffs({1, 2, 4, 2})));
    o.require(south.cyclic_coeffs() == make_coeffs({4, 4}), "south gives " + south.str());
    o.require(west.cyclic_coeffs() == make_coeffs({1, 2, 4, 1}), "west gives " + west.str());
    o.detail << "south -> " << south.str() << ", west -> " << west.str();
}

void c5(Outcome& o) {
    const UniquenessReport small = uniqueness_scan(29);
    const std::set<MarkovTriple> have(small.triples.begin(), small.triples.end());
    for (const MarkovTriple& t : {MarkovTriple(1, 1, 1), MarkovTriple(1, 1, 2), MarkovTriple(1, 2, 5),
                                  MarkovTriple(1, 5, 13), MarkovTriple(2, 5, 29)}) {
        o.require(have.count(t) == 1, "missing " + t.str());
    }
    o.require(mutate(MarkovTriple(1, 2, 5), 1) == MarkovTriple(2, 5, 29), "mutation (1,2,5) -> (2,5,29)");
    o.require(markov_number({1, 1}) == 2 && markov_number({1, 2}) == 5 && markov_number({1, 3}) == 13 &&
                  markov_number({2, 3}) == 29,
              "m_{b/a} values");

    const UniquenessReport big = uniqueness_scan(1000000);
    bool eq2 = true;
    for (const MarkovTriple& t : big.triples) {
        eq2 = eq2 && t[0] * t[0] + t[1] * t[1] + t[2] * t[2] == 3 * t[0] * t[1] * t[2];
    }
    o.require(eq2, "Markov equation");
    o.require(big.duplicates.empty(), "duplicate maxima");

    // Every triple up to 1000 found by the tree is found by the brute-force
    // search and vice versa.
    std::size_t brute = 0;
    for (const auto& [m, ts] : oracle::markov_triples_brute(1000)) brute += ts.size();
    o.require(uniqueness_scan(1000).triples.size() == brute, "tree vs brute-force triples up to 1000");
    o.detail << big.triples.size() << " triples up to 10^6 satisfy x^2+y^2+z^2=3xyz, no duplicate maxima";
}

void c6(Outcome& o) {
    std::size_t n = 0;
    for (std::uint32_t a = 2; a <= 14; ++a) {
        for (std::uint32_t b = 1; b < a && a + b <= 15; ++b) {
            if (std::gcd(a, b) != 1) continue;
            // The Christoffel word is the path with no lattice point strictly
            // between it and the diagonal; M is the numerator of its fraction.
            std::string word;
            for (const std::string& w : oracle::paths(a, b)) {
                if (oracle::pick_interior(w, a, b) == 0) word = w;
            }
            std::vector<long> v;
            for (const BigInt& x : cf_from_path(word)) v.push_back(x.get_si());
            const mpz_class m = oracle::fold(v).get_num();
            o.require(word == christoffel(a, b).word(), "christoffel(" + std::to_string(a) + "," + std::to_string(b) + ")");
            o.require(m == markov_number({b, a}) && m == m_of_path(christoffel(a, b)),
                      "m_{" + std::to_string(b) + "/" + std::to_string(a) + "}");
            ++n;
        }
    }
    o.detail << n << " coprime pairs with a+b <= 15";
}

void c7(Outcome& o) {
    const Q three = Q::from_integer(3);
    std::size_t paths = 0;
    for_each_endpoint(11, [&](std::uint32_t a, std::uint32_t b) {
        for (const std::string& w : oracle::paths(a, b)) {
            const LatticePath p = validate_path(w, a, b);
            Coeffs band{BigInt(2)};
            for (const BigInt& x : cf_from_path(w)) band.push_back(x);
            const Q l = oracle::perron_max(band);
            const bool chris = oracle::pick_interior(w, a, b) == 0;
            o.require(l == l_of_path(p), "L(" + w + ")");
            o.require((compare(l, three) == std::strong_ordering::less) == chris, "L < 3 iff Christoffel for " + w);
            if (chris) {
                std::vector<long> v;
                for (const BigInt& x : cf_from_path(w)) v.push_back(x.get_si());
                const mpz_class m = oracle::fold(v).get_num();
                o.require(l == Q::sqrt_over(9 * m * m - 4, m), "sqrt(9m^2-4)/m for " + w);
            }
            ++paths;
        }
    });
    o.require(lagrange_from_markov(1) == Q::sqrt_over(5, 1) && lagrange_from_markov(2) == Q::sqrt_over(8, 1) &&
                  lagrange_from_markov(5) == Q::sqrt_over(221, 5) && lagrange_from_markov(13) == Q::sqrt_over(1517, 13),
              "first four Lagrange numbers");
    o.require(l_of_path(christoffel(2, 1)) == Q::sqrt_over(221, 5) && l_of_path(christoffel(3, 1)) == Q::sqrt_over(1517, 13),
              "Christoffel paths (2,1), (3,1)");
    o.detail << paths << " paths with a+b <= 11; sqrt(5), sqrt(8), sqrt(221)/5, sqrt(1517)/13";
}

void c8(Outcome& o) {
    const LatticePath z = parse_path("RRURURRURRUUU"), zp = parse_path("RRRURURRUURUU");
    o.require(m_of_path(z) == 40199 && m_of_path(zp) == 40199, "M = 40199");
    o.require(evaluate(cf_from_path(z)) == Rational(40199, 23549), "fraction of zeta");
    o.require(evaluate(cf_from_path(zp)) == Rational(40199, 24653), "fraction of zeta'");
    const Q lz = l_of_path(z), lzp = l_of_path(zp);
    o.require(lz == Q::sqrt_over(BigInt("16530502037"), 40189), "L(zeta) = " + lz.str());
    o.require(lzp == Q::sqrt_over(BigInt("16545934157"), 40547),
              "L(zeta') = sqrt(16545934157)/40547 expected, computed " + lzp.str());
    o.require(lattice_points_between(z) == 4 && lattice_points_between(zp) == 6, "lattice points 4 and 6");
    o.detail << "M 40199/40199, fractions 40199/23549 and 40199/24653, L(zeta) " << lz.str() << ", L(zeta') "
             << lzp.str() << ", lattice points " << lattice_points_between(z) << " and " << lattice_points_between(zp);
}

void c9(Outcome& o) {
    const LatticePath z1 = parse_path("RRRRUURRRUURU"), z2 = parse_path("RRRRURUURRRUU");
    o.require(l_of_path(z1) == l_of_path(z2), "L(zeta_1) = L(zeta_2)");
    const BandGraph b1 = band_of_path(z1), b2 = band_of_path(z2);
    o.require(band_isomorphic(b1, b2), "band isomorphism");
    // Needs the reversal: no plain rotation maps one onto the other.
    const Coeffs& x = b1.cyclic_coeffs();
    Coeffs y = b2.cyclic_coeffs();
    bool rotation = false;
    for (std::size_t k = 0; k < y.size(); ++k) {
        rotation = rotation || x == y;
        std::rotate(y.begin(), y.begin() + 1, y.end());
    }
    o.require(!rotation, "isomorphism should need a reversal");
    o.require(m_of_path(z1) == 49396 && m_of_path(z2) == 46900, "M values");
    o.detail << "L = " << l_of_path(z1).str() << " for both; bands isomorphic by reversal and rotation; M 49396, 46900";
}

void c10(Outcome& o) {
    const auto recs = compute_all_records(11);
    const SupReport s = sup_scan(recs, 11);
    o.require(s.gap_sign < 0, "max L below 1+sqrt(5)");
    o.detail << recs.size() << " paths; max L = " << recs[s.argmax].l.value.str() << " ~ "
             << to_decimal(recs[s.argmax].l.value, 12) << " at " << recs[s.argmax].path.word() << " < 1+sqrt(5) ~ "
             << to_decimal(s.bound, 12);
}

void c11(Outcome& o) {
    std::size_t sets = 0;
    std::vector<std::string> findings;
    for_each_endpoint(10, [&](std::uint32_t a, std::uint32_t b) {
        const auto recs = compute_records(a, b, 10);
        const Extremes e = extremes(recs);
        const std::string top = std::string(a, 'R') + std::string(b, 'U');
        auto unique_top = [&](const std::vector<std::size_t>& idx) {
            return idx.size() == 1 && recs[idx[0]].path.word() == top;
        };
        if (!unique_top(e.max_m)) findings.push_back("M on D(" + std::to_string(a) + "," + std::to_string(b) + ")");
        if (!unique_top(e.max_l)) findings.push_back("L on D(" + std::to_string(a) + "," + std::to_string(b) + ")");
        ++sets;
    });
    o.detail << sets << " sets D(a,b) with a+b <= 10; findings: " << findings.size();
    for (const std::string& f : findings) o.detail << " {" << f << "}";
}

void c12(Outcome& o) {
    const LimitReport r = limit_demo(12);
    const Rational gap = r.tail_sup - Rational(3);
    o.require(Rational(-1, 100) < gap && gap < Rational(1, 100), "tail supremum within 0.01 of 3");
    const Q three = Q::from_integer(3);
    const Q phi2 = Q(3, 1, 5, 2);  // (3+sqrt 5)/2
    const Q first = phi2 + Q::from_integer(2) / Q(3, 1, 5, 1);
    const Q second = Q(8, 2, 5, 1) / Q(3, 1, 5, 1) + Q::from_integer(2) / Q(1, 1, 5, 1);
    o.require(first == three && second == three, "limit values equal 3");
    o.require(r.limit_left == phi2 && r.alt_left == Q(8, 2, 5, 1) / Q(3, 1, 5, 1), "[2,~1] and [2,2,~1]");
    o.require(r.limit_sum == three && r.alt_sum == three, "library limit sums");
    o.detail << "k = 12: " << r.samples.size() << " samples, tail sup - 3 = "
             << to_decimal(Q(gap), 15) << "; both limit sums are exactly 3";
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expected_failures;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
            expected_failures.insert(std::atoi(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--expect-fail N]...\n";
            return 2;
        }
    }

    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"continued fractions", c1},
        {"snake matchings", c2},
        {"band matchings", c3},
        {"band construction", c4},
        {"Markov tree", c5},
        {"Christoffel paths carry Markov numbers", c6},
        {"L < 3 exactly on Christoffel paths", c7},
        {"zeta and zeta' reference values", c8},
        {"equal-L pair in D(8,5)", c9},
        {"sup L evidence (soft)", c10},
        {"R^aU^b maximal evidence (soft)", c11},
        {"limit demo", c12}};

    std::set<int> failures;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.failed += std::string(" [exception: ") + e.what() + "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const int id = static_cast<int>(i + 1);
        if (!o.pass) failures.insert(id);
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << criteria[i].first << ": "
                  << o.detail.str() << o.failed << " (" << std::fixed << std::setprecision(2) << secs << "s)\n";
    }
    std::cout << (criteria.size() - failures.size()) << "/" << criteria.size() << " criteria passed\n";
    if (failures == expected_failures) {
        if (!failures.empty()) std::cout << "all failures are known and documented\n";
        return 0;
    }
    for (int id : failures) {
        if (!expected_failures.count(id)) std::cout << "unexpected failure: criterion " << id << "\n";
    }
    for (int id : expected_failures) {
        if (!failures.count(id)) std::cout << "expected failure did not occur: criterion " << id << "\n";
    }
    return 1;
}
