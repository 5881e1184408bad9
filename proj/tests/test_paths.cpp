#include <doctest.h>

#include <numeric>

#include "latsnake/errors.hpp"
#include "latsnake/paths.hpp"
#include "oracles.hpp"
#include "perron.hpp"

using namespace latsnake;

namespace {

const std::string kZeta = "RRURURRURRUUU";
const std::string kZetaPrime = "RRRURURRUURUU";

Coeffs band_coeffs(const LatticePath& p) { return band_of_path(p).cyclic_coeffs(); }

}  // namespace

TEST_CASE("validation") {
    CHECK_NOTHROW(validate_path("RRRUURU", 4, 3));
    CHECK_THROWS_AS(validate_path("RURRUUR", 4, 3), InvalidInput);
    CHECK_THROWS_AS(validate_path("RRRUUR", 4, 3), InvalidInput);
    CHECK_THROWS_AS(validate_path("RRRUUXU", 4, 3), InvalidInput);
    CHECK_THROWS_AS(validate_path("RRUU", 2, 2), InvalidInput);
    CHECK_THROWS_AS(validate_path("RRRRUU", 4, 2), InvalidInput);
    CHECK_THROWS_AS(validate_path("URR", 2, 1), InvalidInput);
    try {
        validate_path("RURRUUR", 4, 3);
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("prefix RU ") != std::string::npos);
    }
    CHECK(parse_path(kZeta).a() == 7);
    CHECK(parse_path(kZeta).b() == 6);
}

TEST_CASE("enumeration matches the brute-force word filter") {
    for (unsigned total = 3; total <= 15; ++total) {
        for (unsigned a = total / 2 + 1; a < total; ++a) {
            const unsigned b = total - a;
            if (std::gcd(a, b) != 1) continue;
            const auto expected = oracle::paths(a, b);
            const auto got = enumerate_paths(a, b, 15);
            REQUIRE(got.size() == expected.size());
            for (std::size_t i = 0; i < got.size(); ++i) REQUIRE(got[i].word() == expected[i]);
            REQUIRE(path_count(a, b) == static_cast<unsigned long>(expected.size()));
            const PathIndex index(a, b, 15);
            REQUIRE(index.size() == expected.size());
            const auto tail = index.range(expected.size() / 2, expected.size());
            for (std::size_t i = 0; i < tail.size(); ++i) REQUIRE(tail[i].word() == expected[expected.size() / 2 + i]);
        }
    }
    CHECK_THROWS_AS(enumerate_paths(8, 5, 11), CapExceeded);
    CHECK_THROWS_AS(enumerate_paths(4, 2, 11), InvalidInput);
    CHECK(path_count(31, 30) == BigInt("3814986502092304"));
}

TEST_CASE("Christoffel words") {
    CHECK(christoffel(2, 1).word() == "RRU");
    CHECK(christoffel(4, 3).word() == "RRURURU");
    CHECK(christoffel(5, 2).word() == "RRRURRU");
    // The Christoffel path is the only one with no lattice point strictly
    // between it and the diagonal.
    for (unsigned a = 2; a <= 12; ++a) {
        for (unsigned b = 1; b < a && a + b <= 15; ++b) {
            if (std::gcd(a, b) != 1) continue;
            std::vector<std::string> empty;
            for (const std::string& w : oracle::paths(a, b)) {
                if (oracle::pick_interior(w, a, b) == 0) empty.push_back(w);
            }
            REQUIRE(empty.size() == 1);
            CHECK(christoffel(a, b).word() == empty[0]);
            CHECK(is_christoffel(christoffel(a, b)));
        }
    }
    CHECK_FALSE(is_christoffel(parse_path("RRRUU")));
}

TEST_CASE("pair rule") {
    CHECK(cf_from_path("RRRUURU") == make_coeffs({1, 1, 1, 1, 2, 1, 1, 2, 2}));
    CHECK(cf_from_path(kZeta) == make_coeffs({1, 1, 2, 2, 2, 2, 1, 1, 2, 2, 1, 1, 2, 1, 1, 1, 1}));
    CHECK(band_coeffs(parse_path("RRRUURU")) == make_coeffs({2, 1, 1, 1, 1, 2, 1, 1, 2, 2}));
    CHECK(snake_of_path(parse_path(kZeta)).coeffs() == normalize(cf_from_path(kZeta)));
    CHECK_THROWS_AS(cf_from_path("R"), InvalidInput);
}

TEST_CASE("geometric construction agrees with the pair rule for all paths with a+b <= 11") {
    std::size_t n = 0;
    for (unsigned total = 3; total <= 11; ++total) {
        for (unsigned a = total / 2 + 1; a < total; ++a) {
            const unsigned b = total - a;
            if (std::gcd(a, b) != 1) continue;
            for (const LatticePath& p : enumerate_paths(a, b, 11)) {
                REQUIRE(snake_of_path_geometric(p) == snake_of_path(p));
                const Graph band = band_graph_of_path_geometric(p);
                if (band.edges.size() <= 48) {
                    const BandCount c = count_band_matchings(band_coeffs(p));
                    REQUIRE(BigInt(static_cast<unsigned long>(count_perfect_matchings(band, 48))) == c.matchings);
                }
                ++n;
            }
        }
    }
    CHECK(n == 148);
}

TEST_CASE("M values") {
    CHECK(m_of_path(parse_path(kZeta)) == 40199);
    CHECK(m_of_path(parse_path(kZetaPrime)) == 40199);
    CHECK(evaluate(cf_from_path(kZeta)) == Rational(40199, 23549));
    CHECK(evaluate(cf_from_path(kZetaPrime)) == Rational(40199, 24653));
    CHECK(m_of_path(parse_path("RRRRUURRRUURU")) == 49396);
    CHECK(m_of_path(parse_path("RRRRURUURRRUU")) == 46900);
    CHECK(m_of_path(christoffel(2, 1)) == 5);
    // M counts the matchings of the snake.
    const SnakeGraph g = snake_of_path(parse_path("RRRUURU"));
    CHECK(BigInt(static_cast<unsigned long>(count_perfect_matchings(build_graph(g)))) == m_of_path(parse_path("RRRUURU")));
}

TEST_CASE("L values") {
    const LagrangeData c = lagrange_of_path(christoffel(2, 1));
    CHECK(c.value == QuadraticIrrational::sqrt_over(221, 5));
    CHECK(c.D == 221);
    CHECK(c.q_min == 5);
    CHECK(l_of_path(parse_path(kZeta)) == QuadraticIrrational::sqrt_over(BigInt("16530502037"), 40189));
    // The largest two-sided sum for the path RRRURURRUURUU sits at rotation 0.
    const LagrangeData zp = lagrange_of_path(parse_path(kZetaPrime));
    CHECK(zp.D == BigInt("16545934157"));
    CHECK(zp.q_min == 40199);
    CHECK(zp.argmin_rotation == 0);
}

TEST_CASE("L equals the maximal two-sided sum for every path with a+b <= 11") {
    for (unsigned total = 3; total <= 11; ++total) {
        for (unsigned a = total / 2 + 1; a < total; ++a) {
            const unsigned b = total - a;
            if (std::gcd(a, b) != 1) continue;
            for (const LatticePath& p : enumerate_paths(a, b, 11)) {
                REQUIRE(l_of_path(p) == oracle::perron_max(band_coeffs(p)));
            }
        }
    }
}

TEST_CASE("lattice points against Pick's theorem") {
    CHECK(lattice_points_between(parse_path(kZeta)) == 4);
    CHECK(lattice_points_between(parse_path(kZetaPrime)) == 6);
    for (unsigned total = 3; total <= 13; ++total) {
        for (unsigned a = total / 2 + 1; a < total; ++a) {
            const unsigned b = total - a;
            if (std::gcd(a, b) != 1) continue;
            for (const std::string& w : oracle::paths(a, b)) {
                REQUIRE(static_cast<long>(lattice_points_between(validate_path(w, a, b))) == oracle::pick_interior(w, a, b));
            }
        }
    }
}
