#include "latsnake/quadirr.hpp"

#include <string>
#include <utility>

#include "latsnake/errors.hpp"

namespace latsnake {

QuadraticIrrational::QuadraticIrrational(const Rational& x) : a_(x.num()), c_(x.den()) {}

QuadraticIrrational::QuadraticIrrational(BigInt a, BigInt b, BigInt d, BigInt c)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)), c_(std::move(c)) {
    canonicalize();
}

void QuadraticIrrational::canonicalize() {
    if (c_ == 0) throw InvalidInput("quadratic irrational with zero denominator");
    if (d_ < 0) throw InvalidInput("negative radicand " + d_.get_str());
    if (c_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    if (b_ == 0 || d_ == 0) {
        b_ = 0;
        d_ = 0;
    } else {
        SquarefreeSplit split = squarefree_split(d_);
        b_ *= split.square;
        d_ = std::move(split.core);
        canonical_ = split.exact;
        if (d_ == 1) {
            a_ += b_;
            b_ = 0;
            d_ = 0;
        }
    }
    BigInt g = gcd(gcd(a_, b_), c_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

std::string QuadraticIrrational::str() const {
    if (b_ == 0) {
        return c_ == 1 ? a_.get_str() : a_.get_str() + "/" + c_.get_str();
    }
    BigInt abs_b = abs(b_);
    std::string root = (abs_b == 1 ? std::string() : abs_b.get_str() + "*") + "sqrt(" + d_.get_str() + ")";
    std::string numer;
    if (a_ == 0) {
        numer = (b_ < 0 ? "-" : "") + root;
    } else {
        numer = a_.get_str() + (b_ < 0 ? "-" : "+") + root;
    }
    if (c_ == 1) return numer;
    if (a_ != 0) numer = "(" + numer + ")";
    return numer + "/" + c_.get_str();
}

double QuadraticIrrational::to_double() const { return std::stod(to_decimal(*this, 20)); }

QuadraticIrrational QuadraticIrrational::operator-() const {
    QuadraticIrrational out = *this;
    out.a_ = -out.a_;
    out.b_ = -out.b_;
    return out;
}

namespace {

// Common radicand for a binary operation, or InvalidInput when the operands
// live in different quadratic fields.
const BigInt& shared_radicand(const QuadraticIrrational& x, const QuadraticIrrational& y) {
    if (x.is_rational()) return y.d();
    if (y.is_rational() || x.d() == y.d()) return x.d();
    throw InvalidInput("operands lie in different quadratic fields: sqrt(" + x.d().get_str() + ") and sqrt(" +
                       y.d().get_str() + ")");
}

}  // namespace

QuadraticIrrational operator+(const QuadraticIrrational& x, const QuadraticIrrational& y) {
    const BigInt& d = shared_radicand(x, y);
    return {x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, d, x.c_ * y.c_};
}

QuadraticIrrational operator-(const QuadraticIrrational& x, const QuadraticIrrational& y) { return x + (-y); }

QuadraticIrrational operator*(const QuadraticIrrational& x, const QuadraticIrrational& y) {
    const BigInt& d = shared_radicand(x, y);
    return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d, x.c_ * y.c_};
}

QuadraticIrrational operator/(const QuadraticIrrational& x, const QuadraticIrrational& y) {
    const BigInt& d = shared_radicand(x, y);
    // 1/y = c2 (a2 - b2 sqrt d) / (a2^2 - b2^2 d)
    BigInt norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
    if (norm == 0) throw InvalidInput("division by zero");
    QuadraticIrrational inverse(y.c_ * y.a_, -y.c_ * y.b_, d, norm);
    return x * inverse;
}

bool operator==(const QuadraticIrrational& x, const QuadraticIrrational& y) {
    if (x.canonical_ && y.canonical_) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_ && x.c_ == y.c_;
    }
    return compare(x, y) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const QuadraticIrrational& x, const QuadraticIrrational& y) { return compare(x, y); }

int sign_of(const BigInt& A, const BigInt& B, const BigInt& d) {
    int sa = sgn(A);
    if (B == 0 || d == 0) return sa;
    int sb = sgn(B);
    if (sa == 0 || sa == sb) return sb;
    int t = cmp(BigInt(A * A), BigInt(B * B * d));
    return t > 0 ? sa : (t < 0 ? sb : 0);
}

int sign_of(const BigInt& A, const BigInt& B, const BigInt& d1, const BigInt& C, const BigInt& d2) {
    if (C == 0 || d2 == 0) return sign_of(A, B, d1);
    if (B == 0 || d1 == 0) return sign_of(A, C, d2);
    if (d1 == d2) return sign_of(A, BigInt(B + C), d1);
    int sx = sign_of(A, B, d1);
    int sy = sgn(C);
    if (sx == 0 || sx == sy) return sy;
    // Opposite signs: compare (A + B sqrt d1)^2 with C^2 d2.
    int t = sign_of(BigInt(A * A + B * B * d1 - C * C * d2), BigInt(2 * A * B), d1);
    return t > 0 ? sx : (t < 0 ? sy : 0);
}

std::strong_ordering compare(const QuadraticIrrational& x, const QuadraticIrrational& y) {
    int s = sign_of(BigInt(x.a() * y.c() - y.a() * x.c()), BigInt(x.b() * y.c()), x.d(), BigInt(-y.b() * x.c()), y.d());
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

QuadraticIrrational conjugate(const QuadraticIrrational& x) { return {x.a(), -x.b(), x.d(), x.c()}; }

BigInt radicand(std::span<const BigInt> period) {
    ConvergentMatrix m = matrix(period);
    BigInt diff = m.p - m.s;
    return diff * diff + 4 * m.r * m.q;
}

QuadraticIrrational from_periodic(std::span<const BigInt> period) {
    // x = [period, x] = (p x + r)/(q x + s), so q x^2 + (s - p) x - r = 0.
    ConvergentMatrix m = matrix(period);
    BigInt diff = m.p - m.s;
    BigInt D = diff * diff + 4 * m.r * m.q;
    return {diff, 1, D, 2 * m.q};
}

QuadraticIrrational from_eventually_periodic(std::span<const BigInt> prefix, std::span<const BigInt> period) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (prefix[i] < 0 || (prefix[i] == 0 && i != 0)) {
            throw InvalidInput("only the leading prefix coefficient may be 0; all others must be positive");
        }
    }
    QuadraticIrrational x = from_periodic(period);
    const QuadraticIrrational one = QuadraticIrrational::from_integer(1);
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
        x = QuadraticIrrational::from_integer(*it) + one / x;
    }
    return x;
}

BigInt floor_of(const BigInt& A, const BigInt& B, const BigInt& d, const BigInt& C) {
    if (C <= 0) throw InvalidInput("floor_of needs a positive denominator");
    BigInt out;
    if (B == 0 || d == 0) {
        mpz_fdiv_q(out.get_mpz_t(), A.get_mpz_t(), C.get_mpz_t());
        return out;
    }
    // sqrt(N) lies in [s, s+1) with N = B^2 d.
    BigInt N = B * B * d;
    BigInt s = isqrt(N);
    BigInt t;
    if (B > 0) {
        t = A + s;
    } else {
        t = A - s;
        if (s * s != N) t -= 1;
    }
    mpz_fdiv_q(out.get_mpz_t(), t.get_mpz_t(), C.get_mpz_t());
    return out;
}

std::string to_decimal(const QuadraticIrrational& x, unsigned digits, bool round_nearest) {
    if (digits > 1000) throw InvalidInput("at most 1000 decimal digits are supported");
    const bool negative = compare(x, QuadraticIrrational()) == std::strong_ordering::less;
    const QuadraticIrrational y = negative ? -x : x;

    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    BigInt scaled;
    if (round_nearest) {
        scaled = floor_of(2 * y.a() * scale + y.c(), 2 * y.b() * scale, y.d(), 2 * y.c());
    } else {
        scaled = floor_of(y.a() * scale, y.b() * scale, y.d(), y.c());
    }

    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string out = (negative && scaled != 0 ? "-" : "") + whole.get_str();
    if (digits > 0) {
        std::string tail = frac.get_str();
        out += '.';
        out.append(digits - tail.size(), '0');
        out += tail;
    }
    return out;
}

}  // namespace latsnake
