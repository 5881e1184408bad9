#include <doctest.h>

#include <numeric>

#include "latsnake/errors.hpp"
#include "latsnake/markov.hpp"
#include "latsnake/paths.hpp"
#include "oracles.hpp"

using namespace latsnake;

TEST_CASE("mutation") {
    const MarkovTriple root(1, 1, 1);
    for (int pos = 1; pos <= 3; ++pos) CHECK(mutate(root, pos) == MarkovTriple(1, 1, 2));
    CHECK(mutate(MarkovTriple(1, 2, 5), 1) == MarkovTriple(2, 5, 29));
    const MarkovTriple t(5, 13, 194);
    for (int pos = 1; pos <= 3; ++pos) {
        const MarkovTriple u = mutate(t, pos);
        // Sorting may move the new entry, so undo by searching all positions.
        bool back = false;
        for (int q = 1; q <= 3; ++q) back = back || mutate(u, q) == t;
        CHECK(back);
    }
    CHECK_THROWS_AS(MarkovTriple(1, 2, 3), InvalidInput);
    CHECK_THROWS_AS(mutate(root, 4), InvalidInput);
    CHECK(MarkovTriple(5, 1, 2).str() == "(1,2,5)");
}

TEST_CASE("Stern-Brocot indexing") {
    CHECK(markov_number({1, 1}) == 2);
    CHECK(markov_number({1, 2}) == 5);
    CHECK(markov_number({1, 3}) == 13);
    CHECK(markov_number({2, 3}) == 29);
    CHECK(markov_number({1, 4}) == 34);
    CHECK(markov_triple({1, 4}) == MarkovTriple(1, 13, 34));
    CHECK(markov_triple({1, 1}) == MarkovTriple(1, 1, 2));
    CHECK_THROWS_AS(markov_number({0, 1}), InvalidInput);
    CHECK_THROWS_AS(markov_number({3, 2}), InvalidInput);
    CHECK_THROWS_AS(markov_number({2, 4}), InvalidInput);
    CHECK_THROWS_AS(parse_farey("3/2"), InvalidInput);
    CHECK_THROWS_AS(parse_farey("2"), InvalidInput);
    CHECK(parse_farey("2/3").a == 3);
}

TEST_CASE("Stern-Brocot indexing reaches every Markov number up to 1000") {
    // Every fraction b/a with a <= 40 gives a Markov number; collect those
    // small enough and compare with the brute-force triple search.
    const long bound = 1000;
    const auto brute = oracle::markov_triples_brute(bound);
    std::set<long> from_tree;
    for (std::uint64_t a = 1; a <= 40; ++a) {
        for (std::uint64_t b = 1; b <= a; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const MarkovTriple t = markov_triple({b, a});
            REQUIRE(is_markov_triple(t[0], t[1], t[2]));
            if (t.max() <= bound) from_tree.insert(t.max().get_si());
        }
    }
    std::set<long> expected;
    for (const auto& [m, triples] : brute) expected.insert(m);
    expected.insert(1);  // m_0, the root (1,1,1)
    from_tree.insert(1);
    CHECK(from_tree == expected);
}

TEST_CASE("Christoffel paths carry Markov numbers for a+b <= 15") {
    for (std::uint32_t a = 2; a <= 14; ++a) {
        for (std::uint32_t b = 1; b < a && a + b <= 15; ++b) {
            if (std::gcd(a, b) != 1) continue;
            CHECK(m_of_path(christoffel(a, b)) == markov_number({b, a}));
        }
    }
}

TEST_CASE("Lagrange numbers") {
    CHECK(lagrange_from_markov(1) == QuadraticIrrational::sqrt_over(5, 1));
    CHECK(lagrange_from_markov(2) == QuadraticIrrational::sqrt_over(8, 1));
    CHECK(lagrange_from_markov(5) == QuadraticIrrational::sqrt_over(221, 5));
    CHECK(lagrange_from_markov(13) == QuadraticIrrational::sqrt_over(1517, 13));
    CHECK_THROWS_AS(lagrange_from_markov(0), InvalidInput);
    const UniquenessReport r = uniqueness_scan(100000);
    for (std::size_t i = 0; i + 1 < r.maxima.size(); ++i) {
        CHECK(compare(lagrange_from_markov(r.maxima[i]), lagrange_from_markov(r.maxima[i + 1])) ==
              std::strong_ordering::less);
        CHECK(compare(lagrange_from_markov(r.maxima[i]), QuadraticIrrational::from_integer(3)) ==
              std::strong_ordering::less);
    }
}

TEST_CASE("uniqueness scan") {
    const UniquenessReport small = uniqueness_scan(2);
    CHECK(small.maxima == std::vector<BigInt>{1, 2});
    CHECK(small.duplicates.empty());
    const UniquenessReport thirty = uniqueness_scan(30);
    CHECK(thirty.maxima == std::vector<BigInt>{1, 2, 5, 13, 29});
    const UniquenessReport k = uniqueness_scan(1000);
    CHECK(k.maxima == std::vector<BigInt>{1, 2, 5, 13, 29, 34, 89, 169, 194, 233, 433, 610, 985});
    CHECK(k.duplicates.empty());
    const auto brute = oracle::markov_triples_brute(1000);
    std::size_t brute_triples = 0;
    for (const auto& [m, ts] : brute) brute_triples += ts.size();
    CHECK(k.triples.size() == brute_triples);
    for (const MarkovTriple& t : k.triples) CHECK(is_markov_triple(t[0], t[1], t[2]));
    CHECK(uniqueness_scan(0).maxima.empty());
    BigInt huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 10, 201);
    CHECK_THROWS_AS(uniqueness_scan(huge), CapExceeded);
}
