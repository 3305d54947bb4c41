#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hypfq/arith.hpp"
#include "hypfq/fields.hpp"
#include "hypfq/rational.hpp"

namespace hypfq {

// Smallest M with p^M > 4 (q + 1 + 2 sqrt(q))^2.
int default_precision(std::uint32_t p, int r);

// Element of Z/p^M.
class PadicInt {
public:
    PadicInt() = default;
    PadicInt(std::uint32_t p, int prec, std::int64_t value);

    std::uint32_t p() const { return p_; }
    int precision() const { return prec_; }
    u64 residue() const { return residue_; }
    u64 modulus() const { return mod_; }
    bool is_unit() const { return residue_ % p_ != 0; }

    PadicInt operator+(const PadicInt& o) const;
    PadicInt operator-(const PadicInt& o) const;
    PadicInt operator-() const;
    PadicInt operator*(const PadicInt& o) const;
    // Throws std::domain_error when not a unit.
    PadicInt inverse() const;
    bool operator==(const PadicInt& o) const;

    // "R mod p^M".
    std::string str() const;

private:
    void check_same(const PadicInt& o) const;
    static PadicInt raw(std::uint32_t p, int prec, u64 mod, u64 residue);

    u64 residue_ = 0;
    u64 mod_ = 1;
    std::uint32_t p_ = 0;
    int prec_ = 0;
};

// ---------------------------------------------------------------- Gamma_p

// Gamma_p(m) mod p^N for all 0 <= m < p^N, built from
// Gamma_p(m+1) = -m Gamma_p(m) (p not dividing m), -Gamma_p(m) otherwise.
class GammaTable {
public:
    GammaTable(std::uint32_t p, int prec);

    std::uint32_t p() const { return p_; }
    int precision() const { return prec_; }
    u64 modulus() const { return mod_; }

    u64 at_integer(u64 m) const { return values_[m % mod_]; }
    // Gamma_p(x) mod p^N for x in Z_(p); throws if p divides den(x).
    u64 at(const Rational& x) const;

private:
    std::uint32_t p_;
    int prec_;
    u64 mod_;
    std::vector<std::uint32_t> values_;
};

// Tables are cached per prime at the largest precision requested so far.
// Requests with p^N above the budget throw std::length_error.
std::shared_ptr<const GammaTable> gamma_table(std::uint32_t p, int prec);
void set_gamma_budget(u64 max_entries);
u64 gamma_budget();

PadicInt gamma_p(const Rational& x, std::uint32_t p, int prec);

// ---------------------------------------------------------------- Z_q

inline constexpr int kMaxDegree = 16;

class ZqElem;

// Z_q modulo p^N with the field modulus lifted coefficientwise to [0, p).
class ZqCtx {
public:
    ZqCtx(std::shared_ptr<const FieldCtx> field, int prec);

    const FieldCtx& field() const { return *field_; }
    std::shared_ptr<const FieldCtx> field_ptr() const { return field_; }
    std::uint32_t p() const { return field_->p(); }
    int r() const { return field_->r(); }
    int precision() const { return prec_; }
    u64 modulus() const { return mod_; }
    const std::array<u64, kMaxDegree + 1>& lifted_modulus() const { return lifted_; }

    ZqElem zero() const;
    ZqElem one() const;
    ZqElem from_int(std::int64_t n) const;
    // Coefficientwise lift of t with digits in [0, p).
    ZqElem lift(const FqElem& t) const;

private:
    std::shared_ptr<const FieldCtx> field_;
    int prec_;
    u64 mod_;
    std::array<u64, kMaxDegree + 1> lifted_{};
};

class ZqElem {
public:
    ZqElem() = default;
    explicit ZqElem(const ZqCtx* ctx) : ctx_(ctx) {}

    const ZqCtx& ctx() const { return *ctx_; }
    const ZqCtx* ctx_ptr() const { return ctx_; }
    u64 coeff(int i) const { return c_[i]; }
    void set_coeff(int i, u64 v) { c_[i] = v % ctx_->modulus(); }
    std::vector<u64> coeffs() const;

    bool is_zero() const;
    // Minimum p-adic valuation of the coefficients; precision() when zero.
    int ord() const;
    bool is_unit() const { return ord() == 0; }

    ZqElem operator+(const ZqElem& o) const;
    ZqElem operator-(const ZqElem& o) const;
    ZqElem operator-() const;
    ZqElem operator*(const ZqElem& o) const;
    ZqElem& operator+=(const ZqElem& o);
    ZqElem& operator-=(const ZqElem& o);
    ZqElem& operator*=(const ZqElem& o) { return *this = *this * o; }
    ZqElem scaled(u64 s) const;
    ZqElem scaled_signed(std::int64_t s) const;
    void add_scaled(const ZqElem& o, u64 s);
    ZqElem pow(u64 e) const;
    // Unit inverse; throws std::domain_error for non-units.
    ZqElem inverse() const;
    // Exact division by p^k; throws when some coefficient is not divisible.
    ZqElem divided_by_p(int k) const;
    ZqElem times_p(int k) const;

    bool operator==(const ZqElem& o) const;
    bool operator!=(const ZqElem& o) const { return !(*this == o); }
    // Equality modulo p^m.
    bool congruent(const ZqElem& o, int m) const;

    FqElem reduce() const;
    // "[c0,c1,...]" (or the bare residue when r = 1), residues mod p^m.
    std::string str(int m = -1) const;

private:
    void check_same(const ZqElem& o) const;

    const ZqCtx* ctx_ = nullptr;
    std::array<u64, kMaxDegree> c_{};
};

// Teichmuller lift of t != 0 by iterating z -> z^q; throws for t = 0.
ZqElem teichmuller(const FqElem& t, const ZqCtx& ctx);

// ---------------------------------------------------------------- p^v * u

// Value p^v * u known modulo p^prec (absolute). u is a unit unless the
// value is zero at this precision, in which case u = 0 and v = prec.
class PadicRationalZq {
public:
    PadicRationalZq() = default;
    PadicRationalZq(const ZqElem& u, std::int64_t v, std::int64_t prec);

    static PadicRationalZq from_int(const ZqCtx& ctx, std::int64_t n);
    static PadicRationalZq from_rational(const ZqCtx& ctx, const Rational& x);
    static PadicRationalZq zero(const ZqCtx& ctx, std::int64_t prec);

    const ZqCtx& ctx() const { return *u_.ctx_ptr(); }
    std::int64_t valuation() const { return v_; }
    std::int64_t precision() const { return prec_; }
    const ZqElem& unit() const { return u_; }
    bool is_zero() const { return u_.is_zero(); }

    PadicRationalZq operator+(const PadicRationalZq& o) const;
    PadicRationalZq operator-(const PadicRationalZq& o) const;
    PadicRationalZq operator-() const;
    PadicRationalZq operator*(const PadicRationalZq& o) const;
    PadicRationalZq operator/(const PadicRationalZq& o) const;
    PadicRationalZq& operator+=(const PadicRationalZq& o) { return *this = *this + o; }
    PadicRationalZq& operator*=(const PadicRationalZq& o) { return *this = *this * o; }
    PadicRationalZq inverse() const;
    PadicRationalZq with_precision(std::int64_t prec) const;

    // Equality at the smaller of the two precisions.
    bool equals(const PadicRationalZq& o) const { return (*this - o).is_zero(); }

    // Recovers an integer n in [lo, hi]: the value must lie in Z_p at
    // precision, the symmetric residue must satisfy |s| <= p^prec / 4, and
    // p^prec must exceed 4 max(|lo|, |hi|). nullopt otherwise.
    std::optional<std::int64_t> to_integer(std::int64_t lo, std::int64_t hi) const;

    // Unit residue "u mod p^k" where k is the relative precision.
    std::string residue_str() const;
    std::string str() const;

private:
    void normalize();

    ZqElem u_;
    std::int64_t v_ = 0;
    std::int64_t prec_ = 0;
};

// ---------------------------------------------------------------- Z_q[pi]

class EisElem;

// Z_q[pi] / (pi^{p-1} + p) over a Z_q context.
class EisCtx {
public:
    explicit EisCtx(const ZqCtx& zq);

    const ZqCtx& zq() const { return *zq_; }
    std::uint32_t p() const { return zq_->p(); }
    int degree() const { return static_cast<int>(zq_->p()) - 1; }

    EisElem zero() const;
    EisElem one() const;
    EisElem pi() const;
    EisElem from_zq(const ZqElem& z) const;
    // zeta_p = 1 + pi w with w = 1 mod pi, Hensel-lifted.
    const EisElem& zeta() const;

private:
    const ZqCtx* zq_;
    std::shared_ptr<EisElem> zeta_;
};

class EisElem {
public:
    EisElem() = default;
    explicit EisElem(const EisCtx* ctx);

    const EisCtx& ctx() const { return *ctx_; }
    const ZqElem& coeff(int j) const { return c_[j]; }
    void set_coeff(int j, const ZqElem& z) { c_[j] = z; }

    EisElem operator+(const EisElem& o) const;
    EisElem operator-(const EisElem& o) const;
    EisElem operator-() const;
    EisElem operator*(const EisElem& o) const;
    EisElem operator*(const ZqElem& z) const;
    EisElem& operator+=(const EisElem& o);
    EisElem pow(u64 e) const;
    // Multiplication by pi^s for s >= 0.
    EisElem times_pi_power(std::int64_t s) const;
    // Inverse of an element whose constant coefficient is a Z_q unit.
    EisElem inverse_unit() const;

    bool is_zero() const;
    bool operator==(const EisElem& o) const;
    bool congruent(const EisElem& o, int m) const;

    // Coefficients mod p^m as a list of Z_q vectors.
    std::string str(int m = -1) const;

private:
    const EisCtx* ctx_ = nullptr;
    std::vector<ZqElem> c_;
};

// Least j/(p-1) + ord_p(c_j), coefficients taken mod p^m (m < 0: storage
// precision); nullopt when every coefficient vanishes.
std::optional<Rational> valuation(const EisElem& x, int m = -1);

}  // namespace hypfq
