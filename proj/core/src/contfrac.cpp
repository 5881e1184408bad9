#include "latsnake/contfrac.hpp"

#include <utility>

#include "latsnake/errors.hpp"

namespace latsnake {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw InvalidInput("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    int c = cmp(BigInt(x.num_ * y.den_), BigInt(y.num_ * x.den_));
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational operator+(const Rational& x, const Rational& y) {
    return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
}

Rational operator-(const Rational& x, const Rational& y) {
    return {x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_};
}

Rational operator*(const Rational& x, const Rational& y) { return {x.num_ * y.num_, x.den_ * y.den_}; }

Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw InvalidInput("division by zero");
    return {x.num_ * y.den_, x.den_ * y.num_};
}

void require_valid_coeffs(std::span<const BigInt> coeffs) {
    if (coeffs.empty()) throw InvalidInput("continued fraction needs at least one coefficient");
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] < 1) {
            throw InvalidInput("coefficient " + std::to_string(i + 1) + " is " + coeffs[i].get_str() +
                               "; continued fraction coefficients must be positive");
        }
    }
}

ContinuedFraction::ContinuedFraction(Coeffs coeffs) : coeffs_(std::move(coeffs)) {
    require_valid_coeffs(coeffs_);
}

bool ContinuedFraction::is_canonical() const { return coeffs_.size() == 1 || coeffs_.back() >= 2; }

std::string ContinuedFraction::str() const { return format_coeffs(coeffs_); }

ConvergentMatrix matrix(std::span<const BigInt> coeffs) {
    require_valid_coeffs(coeffs);
    // Right-multiplying by [[a,1],[1,0]] maps columns (p,q),(r,s) to
    // (a p + r, a q + s),(p,q).
    ConvergentMatrix m;
    for (const BigInt& a : coeffs) {
        BigInt p = a * m.p + m.r;
        BigInt q = a * m.q + m.s;
        m.r = std::move(m.p);
        m.s = std::move(m.q);
        m.p = std::move(p);
        m.q = std::move(q);
    }
    return m;
}

Rational evaluate(std::span<const BigInt> coeffs) {
    ConvergentMatrix m = matrix(coeffs);
    // Consecutive convergents are coprime, so p/q is already reduced.
    return {std::move(m.p), std::move(m.q)};
}

Rational evaluate(const ContinuedFraction& cf) { return evaluate(cf.coeffs()); }

std::vector<Rational> convergents(std::span<const BigInt> coeffs) {
    require_valid_coeffs(coeffs);
    std::vector<Rational> out;
    out.reserve(coeffs.size());
    BigInt p_prev = 1, q_prev = 0, p = coeffs[0], q = 1;
    out.emplace_back(p, q);
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        BigInt p_next = coeffs[i] * p + p_prev;
        BigInt q_next = coeffs[i] * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
        out.emplace_back(p, q);
    }
    return out;
}

Coeffs normalize(std::span<const BigInt> coeffs) {
    require_valid_coeffs(coeffs);
    Coeffs out(coeffs.begin(), coeffs.end());
    if (out.size() >= 2 && out.back() == 1) {
        out.pop_back();
        out.back() += 1;
    }
    return out;
}

ContinuedFraction normalize(const ContinuedFraction& cf) { return ContinuedFraction(normalize(cf.coeffs())); }

Coeffs parse_coeffs(std::string_view text) {
    Coeffs out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
        while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
        if (item.empty()) throw InvalidInput("empty entry in coefficient list '" + std::string(text) + "'");
        out.push_back(parse_bigint(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    require_valid_coeffs(out);
    return out;
}

std::string format_coeffs(std::span<const BigInt> coeffs) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0) out += ',';
        out += coeffs[i].get_str();
    }
    return out;
}

Coeffs make_coeffs(std::initializer_list<long> values) {
    Coeffs out;
    out.reserve(values.size());
    for (long v : values) out.emplace_back(v);
    return out;
}

}  // namespace latsnake
