#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hypfq/fields.hpp"
#include "hypfq/padics.hpp"

namespace hypfq {

// The character omega^a, a taken mod q-1.
class CharIndex {
public:
    CharIndex() = default;
    CharIndex(const FieldCtx* field, std::int64_t a);

    const FieldCtx& field() const { return *field_; }
    std::uint32_t exponent() const { return a_; }
    std::uint32_t order_of_group() const { return n_; }
    bool is_trivial() const { return a_ == 0; }

    CharIndex operator*(const CharIndex& o) const;
    CharIndex operator/(const CharIndex& o) const { return *this * o.inverse(); }
    CharIndex inverse() const;
    CharIndex pow(std::int64_t e) const;
    bool operator==(const CharIndex& o) const { return field_ == o.field_ && a_ == o.a_; }

    // chi(-1) = (-1)^a.
    int at_minus_one() const { return (a_ % 2 == 0) ? 1 : -1; }
    std::string str() const;

private:
    const FieldCtx* field_ = nullptr;
    std::uint32_t a_ = 0;
    std::uint32_t n_ = 1;
};

int delta(const CharIndex& a);

// Gross-Koblitz form g = -pi^s * unit; unit is a Z_p-unit known mod p^precision.
struct GaussSumValue {
    std::int64_t s = 0;
    ZqElem unit;
    int precision = 0;
    std::optional<EisElem> full;
};

// Everything character-valued over one field: Teichmuller powers, the
// Eisenstein ring, and memoized Gauss sums. Immutable after construction
// except for the thread-safe lazy caches.
class CharacterCtx {
public:
    static std::shared_ptr<const CharacterCtx> make(std::shared_ptr<const FieldCtx> field, int precision = -1);

    CharacterCtx(const CharacterCtx&) = delete;
    CharacterCtx& operator=(const CharacterCtx&) = delete;

    const FieldCtx& field() const { return *field_; }
    std::shared_ptr<const FieldCtx> field_ptr() const { return field_; }
    const ZqCtx& zq() const { return *zq_; }
    // Target precision M for Gamma_p based quantities.
    int precision() const { return precision_; }
    std::uint32_t group_order() const { return field_->q() - 1; }

    CharIndex chi(std::int64_t a) const { return CharIndex(field_.get(), a); }
    CharIndex trivial() const { return chi(0); }
    CharIndex quadratic() const { return chi((field_->q() - 1) / 2); }

    // W^j for W = omega(generator).
    const ZqElem& omega_power(std::uint64_t j) const { return omega_pow_[j % group_order()]; }
    // omega^a(x), with omega^a(0) = 0 for every a.
    const ZqElem& eval(std::uint32_t a, std::uint32_t code) const;
    ZqElem eval(const CharIndex& chi, const FqElem& x) const { return eval(chi.exponent(), x.code()); }

    const EisCtx& eis() const;
    // zeta^c for c in [0, p).
    const EisElem& zeta_power(std::uint32_t c) const;
    const EisElem& gauss_sum_direct(const CharIndex& chi) const;
    const GaussSumValue& gauss_sum_gk(const CharIndex& chi) const;

private:
    CharacterCtx(std::shared_ptr<const FieldCtx> field, int precision);
    void build_eisenstein() const;
    void build_gk() const;

    std::shared_ptr<const FieldCtx> field_;
    std::unique_ptr<ZqCtx> zq_;
    int precision_;
    std::vector<ZqElem> omega_pow_;
    ZqElem zero_;

    mutable std::once_flag eis_once_;
    mutable std::unique_ptr<EisCtx> eis_;
    mutable std::vector<EisElem> zeta_pow_;
    mutable std::vector<EisElem> gauss_direct_;
    mutable std::once_flag gk_once_;
    mutable std::vector<GaussSumValue> gauss_gk_;
};

ZqElem char_eval(const CharacterCtx& ctx, const CharIndex& chi, const FqElem& x);

// Direct summation sum_x chi(x) zeta^{tr x}, with its Gross-Koblitz form.
GaussSumValue gauss_sum(const CharacterCtx& ctx, const CharIndex& chi);

// Product of Gauss sums and their inverses, tracked through the
// Gross-Koblitz decomposition. value() requires the pi-exponent to be a
// multiple of p-1, which holds whenever the characters multiply to epsilon.
class GaussProduct {
public:
    explicit GaussProduct(const CharacterCtx& ctx);

    GaussProduct& mul(const CharIndex& chi);
    GaussProduct& div(const CharIndex& chi);
    GaussProduct& scale(const ZqElem& z);

    std::int64_t pi_exponent() const { return pi_exp_; }
    PadicRationalZq value() const;

private:
    const CharacterCtx* ctx_;
    int sign_ = 1;
    std::int64_t pi_exp_ = 0;
    ZqElem unit_;
};

ZqElem jacobi_sum(const CharacterCtx& ctx, const CharIndex& a, const CharIndex& b);

// (A choose B) = B(-1) J(A, conj B) / q.
PadicRationalZq binomial(const CharacterCtx& ctx, const CharIndex& a, const CharIndex& b);

// theta(alpha) = 1/(q-1) sum_m g(T^{-m}) T^m(alpha) in the pi-ring.
bool theta_expansion_check(const CharacterCtx& ctx, const FqElem& alpha);

// sum over all chi of chi(x).
ZqElem orthogonality_check(const CharacterCtx& ctx, const FqElem& x);

// C(d, k, alpha) = sum_chi g(chi^d) g(conj chi^{d-k}) chi(alpha) / g(chi^k).
PadicRationalZq char_sum_C(const CharacterCtx& ctx, int d, int k, const FqElem& alpha);

// Complex-valued shadow of g(omega^a) through omega(g) -> exp(2 pi i/(q-1)).
std::complex<double> complex_gauss_sum(const FieldCtx& field, std::uint32_t a);

}  // namespace hypfq
