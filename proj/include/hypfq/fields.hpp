#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypfq {

class FieldCtx;

// Element of F_q. Internally an index ("code") sum_i c_i p^i over the
// coefficient vector (c_0, ..., c_{r-1}) of the residue polynomial.
class FqElem {
public:
    FqElem() = default;
    FqElem(const FieldCtx* ctx, std::uint32_t code) : ctx_(ctx), code_(code) {}

    const FieldCtx& ctx() const;
    const FieldCtx* ctx_ptr() const { return ctx_; }
    std::uint32_t code() const { return code_; }
    bool is_zero() const { return code_ == 0; }
    bool is_one() const;

    std::vector<std::uint32_t> coeffs() const;
    // "c0,c1,...", lowest degree first.
    std::string str() const;

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator-() const;
    FqElem operator*(const FqElem& o) const;
    FqElem operator/(const FqElem& o) const;
    FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
    FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
    FqElem& operator*=(const FqElem& o) { return *this = *this * o; }
    FqElem inverse() const;
    FqElem pow(std::int64_t e) const;
    FqElem frobenius() const;

    bool operator==(const FqElem& o) const;
    bool operator!=(const FqElem& o) const { return !(*this == o); }

private:
    void check_same(const FqElem& o) const;

    const FieldCtx* ctx_ = nullptr;
    std::uint32_t code_ = 0;
};

class FieldCtx {
public:
    std::uint32_t p() const { return p_; }
    int r() const { return r_; }
    std::uint32_t q() const { return q_; }

    // Monic modulus, r+1 coefficients, lowest degree first.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    std::string modulus_str() const;
    std::string name() const;

    FqElem zero() const { return FqElem(this, 0); }
    FqElem one() const { return FqElem(this, 1); }
    FqElem generator() const { return FqElem(this, generator_); }
    FqElem element(std::uint32_t code) const;
    FqElem from_int(std::int64_t n) const;
    FqElem from_coeffs(std::span<const std::uint32_t> c) const;
    FqElem parse(std::string_view s) const;
    std::vector<FqElem> elements() const;

    // Table-backed primitives on codes.
    std::uint32_t add_code(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_code(std::uint32_t a) const;
    std::uint32_t mul_code(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t exp_code(std::uint64_t j) const { return exp_[j % (q_ - 1)]; }
    std::uint32_t dlog_code(std::uint32_t a) const;
    std::uint32_t trace_code(std::uint32_t a) const { return trace_[a]; }

    std::vector<std::uint32_t> digits(std::uint32_t code) const;
    std::uint32_t code_of(std::span<const std::uint32_t> digits) const;

private:
    friend std::shared_ptr<const FieldCtx> make_field(std::uint32_t p, int r);
    FieldCtx() = default;

    std::uint32_t p_ = 0;
    int r_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::uint32_t generator_ = 0;
    std::vector<std::uint32_t> exp_;    // exp_[j] = code of g^j, j < q-1
    std::vector<std::uint32_t> log_;    // log_[code], undefined at 0
    std::vector<std::uint32_t> trace_;  // trace_[code] in [0, p)
};

// Deterministic construction: lexicographically smallest monic irreducible
// modulus (coefficients compared lowest degree first) and smallest generator.
std::shared_ptr<const FieldCtx> make_field(std::uint32_t p, int r);

// tr(x) = x + x^p + ... + x^{p^{r-1}} as a residue mod p.
std::uint32_t trace(const FqElem& x);

// Exponent j in [0, q-2] with g^j = x. Throws std::domain_error for x = 0.
std::uint32_t dlog(const FqElem& x);

// Quadratic character with the convention phi(0) = 0.
int legendre(const FqElem& x);

// Number of distinct roots in F_q of sum_i poly[i] y^i, by evaluation at
// every element. Throws std::invalid_argument on the zero polynomial.
int count_distinct_roots(std::span<const FqElem> poly, const FieldCtx& ctx);

}  // namespace hypfq
