#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "rcm/errors.hpp"

namespace rcm {

// Exact rational on int64 with 128-bit cross-multiplication for comparisons.
// All regime boundaries in this project are exact-equality cases, so density
// comparisons must never go through floating point.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool positive() const { return num_ > 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw MalformedInput("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Serialized as "p/q" ("p" when q == 1), the only form the CLI accepts.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(parse_int(text));
            return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
        } catch (const MalformedInput&) {
            throw MalformedInput("expected a rational literal p/q, got '" + std::string(text) + "'");
        }
    }

private:
    static std::int64_t parse_int(std::string_view s) {
        if (s.empty()) throw MalformedInput("empty integer");
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw MalformedInput("bad integer");
        std::int64_t v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw MalformedInput("bad integer");
            v = v * 10 + (s[i] - '0');
        }
        return s[0] == '-' ? -v : v;
    }

    void normalize() {
        if (den_ == 0) throw MalformedInput("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

// Slope value that may be +infinity (the convention at the left end of an
// upper-hull chain).
struct Slope {
    bool infinite = false;
    Rational value;

    static Slope pos_inf() { return Slope{true, Rational(0)}; }
    static Slope finite(Rational v) { return Slope{false, v}; }

    bool operator==(const Slope& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    // slope >= r, with +inf >= anything
    bool at_least(const Rational& r) const { return infinite || value >= r; }
    // slope <= r, +inf <= nothing finite
    bool at_most(const Rational& r) const { return !infinite && value <= r; }

    std::string str() const { return infinite ? "inf" : value.str(); }
};

}  // namespace rcm
