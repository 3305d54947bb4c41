#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hypfq {

// Exact rational with checked 64-bit numerator/denominator. Every operation
// throws std::overflow_error rather than wrapping.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    // Greatest integer <= this.
    std::int64_t floor() const;
    // Fractional part in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // Parses "n", "-n", "n/d".
    static Rational parse(std::string_view s);
    std::string str() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Parses a comma-separated list such as "1/4,3/4".
std::vector<Rational> parse_rational_list(std::string_view s);

}  // namespace hypfq
