#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace halpha {

// Exact rational arithmetic for indicator values. Keeps report output
// free of floating-point rounding: ratios stay exact until rendering.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {} // NOLINT: implicit by design

    constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0)
            throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    constexpr std::int64_t numerator() const { return num_; }
    constexpr std::int64_t denominator() const { return den_; }
    constexpr bool is_integer() const { return den_ == 1; }

    friend constexpr bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend constexpr bool operator<(const Rational& a, const Rational& b) {
        // den_ > 0 on both sides, so cross-multiplication preserves order.
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend constexpr bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend constexpr bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend constexpr bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend constexpr Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend constexpr Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    constexpr Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    // Fixed-point decimal rendering with half-up rounding, e.g.
    // Rational(1, 3).to_decimal(4) == "0.3333". Non-negative values only;
    // nothing in the report pipeline renders a negative rational.
    std::string to_decimal(int places) const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace halpha
