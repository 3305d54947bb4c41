#include "hypfq/rational.hpp"

#include <charconv>
#include <stdexcept>

#include "hypfq/arith.hpp"

namespace hypfq {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rational: multiplication overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rational: addition overflow");
    return r;
}

std::int64_t parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    return v;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
        n = checked_mul(n, -1);
        d = checked_mul(d, -1);
    }
    std::int64_t g = gcd_i64(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = n;
    den_ = d;
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational Rational::operator-() const { return Rational(checked_mul(num_, -1), den_); }

Rational operator+(const Rational& a, const Rational& b) {
    std::int64_t g = gcd_i64(a.den_, b.den_);
    std::int64_t da = b.den_ / g;
    std::int64_t n = checked_add(checked_mul(a.num_, da), checked_mul(b.num_, a.den_ / g));
    return Rational(n, checked_mul(a.den_, da));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    std::int64_t g1 = gcd_i64(a.num_, b.den_);
    std::int64_t g2 = gcd_i64(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    std::int64_t n = parse_int(s.substr(0, slash));
    std::int64_t d = parse_int(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("malformed fraction '" + std::string(s) + "': zero denominator");
    return Rational(n, d);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::vector<Rational> parse_rational_list(std::string_view s) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        auto piece = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(Rational::parse(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace hypfq
