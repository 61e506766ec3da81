#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace abp {

// Exact rational arithmetic for planning quantities. Numbers written as
// "10", "10.00" and "10/1" all normalize to the same value, so constraint
// evaluation never depends on floating-point rounding.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const {
        return make(w(num_) * o.den_ + w(o.num_) * den_, w(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return make(w(num_) * o.den_ - w(o.num_) * den_, w(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return make(w(num_) * o.num_, w(den_) * o.den_);
    }
    // Division by zero has no result; callers treat it as an evaluation failure.
    std::optional<Rational> divided_by(const Rational& o) const {
        if (o.num_ == 0) return std::nullopt;
        return make(w(num_) * o.den_, w(den_) * o.num_);
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return w(num_) * o.den_ < w(o.num_) * den_; }
    bool operator<=(const Rational& o) const { return w(num_) * o.den_ <= w(o.num_) * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts integers, decimals and slash rationals: "10", "-3.50", "7/2".
    static std::optional<Rational> parse(const std::string& text);

private:
    using wide = __int128;
    static wide w(std::int64_t v) { return static_cast<wide>(v); }

    static Rational make(wide n, wide d) {
        Rational r;
        if (d < 0) { n = -n; d = -d; }
        wide g = gcd_wide(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static wide gcd_wide(wide a, wide b) {
        while (b != 0) { wide t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        Rational r = make(w(num_), w(den_));
        num_ = r.num_;
        den_ = r.den_;
    }

    std::int64_t num_;
    std::int64_t den_;  // > 0
};

inline std::optional<Rational> Rational::parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '-' || text[pos] == '+') {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        return std::nullopt;

    std::int64_t intpart = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        intpart = intpart * 10 + (text[pos] - '0');
        ++pos;
    }

    std::int64_t num = intpart, den = 1;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            return std::nullopt;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            num = num * 10 + (text[pos] - '0');
            den *= 10;
            ++pos;
        }
    } else if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            return std::nullopt;
        std::int64_t d = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            d = d * 10 + (text[pos] - '0');
            ++pos;
        }
        if (d == 0) return std::nullopt;
        den = d;
    }
    if (pos != text.size()) return std::nullopt;
    return Rational(negative ? -num : num, den);
}

}  // namespace abp
