#include "latsnake/bigint.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "latsnake/errors.hpp"

namespace latsnake {

namespace {

// Trial-division budget. Every radicand below kPrimeLimit^3 = 8e18 gets an
// exact squarefree decomposition.
constexpr std::uint32_t kPrimeLimit = 2'000'000;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kPrimeLimit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= kPrimeLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j <= kPrimeLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    if (i == text.size()) throw InvalidInput("expected an integer, got '" + std::string(text) + "'");
    for (std::size_t k = i; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9') {
            throw InvalidInput("expected an integer, got '" + std::string(text) + "'");
        }
    }
    BigInt out;
    out.set_str(std::string(text.substr(text[0] == '+' ? 1 : 0)), 10);
    return out;
}

BigInt isqrt(const BigInt& x) {
    if (x < 0) throw InvalidInput("isqrt of a negative number");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

bool is_perfect_square(const BigInt& x) { return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0; }

SquarefreeSplit squarefree_split(const BigInt& x) {
    if (x < 0) throw InvalidInput("squarefree_split of a negative number");
    if (x == 0) return {BigInt(0), BigInt(0), true};

    BigInt rest = x;
    BigInt square = 1;
    BigInt core = 1;
    bool budget_exhausted = true;
    for (std::uint32_t p : small_primes()) {
        BigInt cube = BigInt(p) * p * p;
        if (cube > rest) {
            budget_exhausted = false;
            break;
        }
        unsigned exponent = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++exponent;
        }
        for (unsigned k = 0; k < exponent / 2; ++k) square *= p;
        if (exponent % 2 == 1) core *= p;
    }

    // `rest` has no prime factor below the last trial divisor. Once that
    // divisor exceeds the cube root, rest is 1, a prime, a product of two
    // distinct primes, or a prime squared.
    bool exact = true;
    if (is_perfect_square(rest)) {
        square *= isqrt(rest);
    } else {
        core *= rest;
        exact = !budget_exhausted;
    }
    return {square, core, exact};
}

}  // namespace latsnake
