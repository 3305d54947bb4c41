#include "hypfq/fields.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "hypfq/arith.hpp"

namespace hypfq {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients mod p, lowest first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f for monic f.
Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
    trim(a);
    const std::size_t n = f.size() - 1;
    while (a.size() > n) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - 1 - n;
        for (std::size_t j = 0; j <= n; ++j)
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - lead) * f[j]) % p);
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    return poly_mod(std::move(c), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
    Poly result = poly_mod(Poly{1}, f, p);
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

// Generic polynomial remainder (divisor need not be monic).
Poly poly_rem(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    std::uint64_t inv_lead = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint64_t c = a.back() * inv_lead % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - c) * b[j]) % p);
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const int r = static_cast<int>(f.size()) - 1;
    Poly xpow{0, 1};
    for (int i = 1; i <= r / 2; ++i) {
        xpow = poly_powmod(xpow, p, f, p);
        Poly h = xpow;
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = (h[1] + p - 1) % p;
        trim(h);
        if (h.empty()) return false;
        Poly g = poly_gcd(f, h, p);
        if (g.size() > 1) return false;
    }
    return true;
}

// Coefficient vectors of length r in lexicographic order, c_0 most significant.
Poly lex_vector(std::uint64_t k, int r, std::uint32_t p) {
    Poly v(r, 0);
    for (int i = r - 1; i >= 0; --i) {
        v[i] = static_cast<std::uint32_t>(k % p);
        k /= p;
    }
    return v;
}

}  // namespace

const FieldCtx& FqElem::ctx() const {
    if (!ctx_) throw std::logic_error("FqElem: no field context");
    return *ctx_;
}

void FqElem::check_same(const FqElem& o) const {
    if (ctx_ == nullptr || ctx_ != o.ctx_) throw std::invalid_argument("FqElem: elements belong to different fields");
}

bool FqElem::is_one() const { return code_ == 1; }

std::vector<std::uint32_t> FqElem::coeffs() const { return ctx().digits(code_); }

std::string FqElem::str() const {
    std::string s;
    for (auto c : coeffs()) {
        if (!s.empty()) s += ',';
        s += std::to_string(c);
    }
    return s;
}

FqElem FqElem::operator+(const FqElem& o) const {
    check_same(o);
    return FqElem(ctx_, ctx_->add_code(code_, o.code_));
}

FqElem FqElem::operator-(const FqElem& o) const {
    check_same(o);
    return FqElem(ctx_, ctx_->add_code(code_, ctx_->neg_code(o.code_)));
}

FqElem FqElem::operator-() const { return FqElem(ctx_, ctx().neg_code(code_)); }

FqElem FqElem::operator*(const FqElem& o) const {
    check_same(o);
    return FqElem(ctx_, ctx_->mul_code(code_, o.code_));
}

FqElem FqElem::operator/(const FqElem& o) const {
    check_same(o);
    return *this * o.inverse();
}

FqElem FqElem::inverse() const {
    if (code_ == 0) throw std::domain_error("FqElem: inverse of zero");
    const auto& c = ctx();
    std::uint32_t l = c.dlog_code(code_);
    return FqElem(ctx_, c.exp_code((c.q() - 1 - l) % (c.q() - 1)));
}

FqElem FqElem::pow(std::int64_t e) const {
    const auto& c = ctx();
    if (code_ == 0) {
        if (e == 0) return c.one();
        if (e < 0) throw std::domain_error("FqElem: negative power of zero");
        return c.zero();
    }
    std::uint64_t n = c.q() - 1;
    std::uint64_t l = c.dlog_code(code_);
    std::uint64_t ee = reduce_signed(e, n);
    return FqElem(ctx_, c.exp_code(mulmod(l, ee, n)));
}

FqElem FqElem::frobenius() const { return pow(ctx().p()); }

bool FqElem::operator==(const FqElem& o) const {
    check_same(o);
    return code_ == o.code_;
}

std::vector<std::uint32_t> FieldCtx::digits(std::uint32_t code) const {
    std::vector<std::uint32_t> d(r_, 0);
    for (int i = 0; i < r_; ++i) {
        d[i] = code % p_;
        code /= p_;
    }
    return d;
}

std::uint32_t FieldCtx::code_of(std::span<const std::uint32_t> digits) const {
    if (static_cast<int>(digits.size()) > r_) throw std::invalid_argument("too many coefficients for F_" + std::to_string(q_));
    std::uint32_t code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= p_) throw std::invalid_argument("coefficient out of range");
        code = code * p_ + digits[i];
    }
    return code;
}

std::uint32_t FieldCtx::add_code(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0, place = 1;
    for (int i = 0; i < r_; ++i) {
        std::uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * place;
        place *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

std::uint32_t FieldCtx::neg_code(std::uint32_t a) const {
    std::uint32_t out = 0, place = 1;
    for (int i = 0; i < r_; ++i) {
        std::uint32_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * place;
        place *= p_;
        a /= p_;
    }
    return out;
}

std::uint32_t FieldCtx::mul_code(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
}

std::uint32_t FieldCtx::dlog_code(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("dlog: zero has no discrete logarithm");
    return log_[a];
}

FqElem FieldCtx::element(std::uint32_t code) const {
    if (code >= q_) throw std::out_of_range("element code out of range");
    return FqElem(this, code);
}

FqElem FieldCtx::from_int(std::int64_t n) const {
    return FqElem(this, static_cast<std::uint32_t>(reduce_signed(n, p_)));
}

FqElem FieldCtx::from_coeffs(std::span<const std::uint32_t> c) const { return FqElem(this, code_of(c)); }

FqElem FieldCtx::parse(std::string_view s) const {
    std::vector<std::uint32_t> digits;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        auto piece = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
            throw std::invalid_argument("malformed field element '" + std::string(s) + "'");
        digits.push_back(static_cast<std::uint32_t>(reduce_signed(v, p_)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (static_cast<int>(digits.size()) > r_)
        throw std::invalid_argument("field element '" + std::string(s) + "' has more than " + std::to_string(r_) +
                                    " coefficients");
    return from_coeffs(digits);
}

std::vector<FqElem> FieldCtx::elements() const {
    std::vector<FqElem> out;
    out.reserve(q_);
    for (std::uint32_t c = 0; c < q_; ++c) out.emplace_back(this, c);
    return out;
}

std::string FieldCtx::modulus_str() const {
    std::string s;
    for (int i = r_; i >= 0; --i) {
        std::uint32_t c = modulus_[i];
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || c != 1) s += std::to_string(c);
        if (i >= 1) s += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
    return s;
}

std::string FieldCtx::name() const { return "F_" + std::to_string(q_); }

std::shared_ptr<const FieldCtx> make_field(std::uint32_t p, int r) {
    if (p == 2) throw std::invalid_argument("make_field: p must be odd");
    if (!is_prime(p)) throw std::invalid_argument("make_field: " + std::to_string(p) + " is not prime");
    if (r < 1) throw std::invalid_argument("make_field: degree must be >= 1");
    std::uint64_t q64 = checked_pow(p, r);
    if (q64 > (1u << 24)) throw std::invalid_argument("make_field: field too large for table-based arithmetic");

    std::shared_ptr<FieldCtx> ctx(new FieldCtx());
    ctx->p_ = p;
    ctx->r_ = r;
    ctx->q_ = static_cast<std::uint32_t>(q64);
    const std::uint32_t q = ctx->q_;

    Poly f;
    if (r == 1) {
        f = {0, 1};
    } else {
        for (std::uint64_t k = 0; k < q64; ++k) {
            Poly cand = lex_vector(k, r, p);
            cand.push_back(1);
            if (is_irreducible(cand, p)) {
                f = cand;
                break;
            }
        }
    }
    if (f.empty()) throw std::logic_error("make_field: no irreducible polynomial found");
    ctx->modulus_ = f;

    auto primes = prime_factors(q - 1);
    Poly gen;
    for (std::uint64_t k = 1; k < q64 && gen.empty(); ++k) {
        Poly cand = lex_vector(k, r, p);
        trim(cand);
        if (cand.empty()) continue;
        if (poly_powmod(cand, q - 1, f, p) != Poly{1}) throw std::logic_error("make_field: modulus is not irreducible");
        bool ok = true;
        for (auto l : primes) {
            if (poly_powmod(cand, (q - 1) / l, f, p) == Poly{1}) {
                ok = false;
                break;
            }
        }
        if (ok) gen = cand;
    }
    if (gen.empty()) throw std::logic_error("make_field: no generator found");
    gen.resize(r, 0);
    ctx->generator_ = ctx->code_of(gen);

    ctx->exp_.resize(q - 1);
    ctx->log_.assign(q, 0);
    std::vector<bool> seen(q, false);
    Poly cur{1};
    for (std::uint32_t j = 0; j < q - 1; ++j) {
        Poly padded = cur;
        padded.resize(r, 0);
        std::uint32_t code = ctx->code_of(padded);
        if (seen[code]) throw std::logic_error("make_field: generator order is too small");
        seen[code] = true;
        ctx->exp_[j] = code;
        ctx->log_[code] = j;
        cur = poly_mulmod(cur, gen, f, p);
    }

    ctx->trace_.assign(q, 0);
    for (std::uint32_t code = 1; code < q; ++code) {
        std::uint32_t acc = 0;
        std::uint64_t l = ctx->log_[code];
        for (int i = 0; i < r; ++i) {
            acc = ctx->add_code(acc, ctx->exp_[l % (q - 1)]);
            l = l * p % (q - 1);
        }
        if (acc >= p) throw std::logic_error("make_field: trace left the prime field");
        ctx->trace_[code] = acc;
    }
    return ctx;
}

std::uint32_t trace(const FqElem& x) { return x.ctx().trace_code(x.code()); }

std::uint32_t dlog(const FqElem& x) { return x.ctx().dlog_code(x.code()); }

int legendre(const FqElem& x) {
    if (x.is_zero()) return 0;
    return (dlog(x) % 2 == 0) ? 1 : -1;
}

int count_distinct_roots(std::span<const FqElem> poly, const FieldCtx& ctx) {
    bool nonzero = false;
    for (const auto& c : poly) {
        if (c.ctx_ptr() != &ctx) throw std::invalid_argument("count_distinct_roots: coefficient from another field");
        if (!c.is_zero()) nonzero = true;
    }
    if (!nonzero) throw std::invalid_argument("count_distinct_roots: zero polynomial");
    int count = 0;
    for (std::uint32_t y = 0; y < ctx.q(); ++y) {
        std::uint32_t acc = 0;
        for (std::size_t i = poly.size(); i-- > 0;) acc = ctx.add_code(ctx.mul_code(acc, y), poly[i].code());
        if (acc == 0) ++count;
    }
    return count;
}

}  // namespace hypfq
