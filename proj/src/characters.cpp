#include "hypfq/characters.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hypfq {

CharIndex::CharIndex(const FieldCtx* field, std::int64_t a) : field_(field) {
    if (!field) throw std::invalid_argument("CharIndex: no field");
    n_ = field->q() - 1;
    a_ = static_cast<std::uint32_t>(reduce_signed(a, n_));
}

CharIndex CharIndex::operator*(const CharIndex& o) const {
    if (field_ != o.field_) throw std::invalid_argument("CharIndex: characters of different fields");
    return CharIndex(field_, static_cast<std::int64_t>(a_) + o.a_);
}

CharIndex CharIndex::inverse() const { return CharIndex(field_, -static_cast<std::int64_t>(a_)); }

CharIndex CharIndex::pow(std::int64_t e) const {
    u64 ee = reduce_signed(e, n_);
    return CharIndex(field_, static_cast<std::int64_t>(mulmod(a_, ee, n_)));
}

std::string CharIndex::str() const { return "w^" + std::to_string(a_); }

int delta(const CharIndex& a) { return a.is_trivial() ? 1 : 0; }

// ---------------------------------------------------------------- context

std::shared_ptr<const CharacterCtx> CharacterCtx::make(std::shared_ptr<const FieldCtx> field, int precision) {
    if (precision < 0) precision = default_precision(field->p(), field->r());
    return std::shared_ptr<const CharacterCtx>(new CharacterCtx(std::move(field), precision));
}

CharacterCtx::CharacterCtx(std::shared_ptr<const FieldCtx> field, int precision)
    : field_(std::move(field)), precision_(precision) {
    int storage = max_storage_precision(field_->p());
    if (precision_ < 1 || precision_ > storage)
        throw std::invalid_argument("CharacterCtx: precision must lie in [1, " + std::to_string(storage) + "]");
    zq_ = std::make_unique<ZqCtx>(field_, storage);
    zero_ = zq_->zero();
    const std::uint32_t n = field_->q() - 1;
    ZqElem w = teichmuller(field_->generator(), *zq_);
    omega_pow_.reserve(n);
    ZqElem cur = zq_->one();
    for (std::uint32_t j = 0; j < n; ++j) {
        omega_pow_.push_back(cur);
        cur = cur * w;
    }
    if (cur != zq_->one()) throw std::logic_error("CharacterCtx: Teichmuller generator has wrong order");
}

const ZqElem& CharacterCtx::eval(std::uint32_t a, std::uint32_t code) const {
    if (code == 0) return zero_;
    const u64 n = group_order();
    return omega_pow_[mulmod(a % n, field_->dlog_code(code), n)];
}

void CharacterCtx::build_eisenstein() const {
    std::call_once(eis_once_, [this] {
        eis_ = std::make_unique<EisCtx>(*zq_);
        const std::uint32_t p = field_->p();
        zeta_pow_.reserve(p);
        EisElem z = eis_->one();
        for (std::uint32_t c = 0; c < p; ++c) {
            zeta_pow_.push_back(z);
            z = z * eis_->zeta();
        }
        const std::uint32_t n = group_order();
        const std::uint32_t q = field_->q();
        gauss_direct_.reserve(n);
        std::vector<std::uint32_t> logs(q), traces(q);
        for (std::uint32_t x = 1; x < q; ++x) {
            logs[x] = field_->dlog_code(x);
            traces[x] = field_->trace_code(x);
        }
        for (std::uint32_t a = 0; a < n; ++a) {
            std::vector<ZqElem> by_trace(p, zq_->zero());
            for (std::uint32_t x = 1; x < q; ++x) by_trace[traces[x]] += omega_pow_[mulmod(a, logs[x], n)];
            EisElem g = eis_->zero();
            for (std::uint32_t c = 0; c < p; ++c)
                if (!by_trace[c].is_zero()) g += zeta_pow_[c] * by_trace[c];
            gauss_direct_.push_back(std::move(g));
        }
    });
}

void CharacterCtx::build_gk() const {
    std::call_once(gk_once_, [this] {
        const std::uint32_t n = group_order();
        const std::uint32_t p = field_->p();
        const int r = field_->r();
        auto table = gamma_table(p, precision_);
        const u64 pm = checked_pow(p, precision_);
        gauss_gk_.reserve(n);
        for (std::uint32_t a = 0; a < n; ++a) {
            // chi = omega^a = conj(omega)^b.
            const u64 b = (n - a) % n;
            std::int64_t digit_sum = 0;
            u64 unit = 1;
            u64 bp = b;
            for (int i = 0; i < r; ++i) {
                Rational frac(static_cast<std::int64_t>(bp), n);
                unit = mulmod(unit, table->at(frac) % pm, pm);
                digit_sum += static_cast<std::int64_t>(bp);
                bp = bp * p % n;
            }
            if (digit_sum * static_cast<std::int64_t>(p - 1) % n != 0)
                throw std::logic_error("gauss_sum: Gross-Koblitz exponent is not integral");
            GaussSumValue v;
            v.s = digit_sum * static_cast<std::int64_t>(p - 1) / n;
            v.unit = zq_->from_int(static_cast<std::int64_t>(unit));
            v.precision = precision_;
            gauss_gk_.push_back(std::move(v));
        }
    });
}

const EisCtx& CharacterCtx::eis() const {
    build_eisenstein();
    return *eis_;
}

const EisElem& CharacterCtx::zeta_power(std::uint32_t c) const {
    build_eisenstein();
    return zeta_pow_[c % field_->p()];
}

const EisElem& CharacterCtx::gauss_sum_direct(const CharIndex& chi) const {
    build_eisenstein();
    return gauss_direct_[chi.exponent()];
}

const GaussSumValue& CharacterCtx::gauss_sum_gk(const CharIndex& chi) const {
    build_gk();
    return gauss_gk_[chi.exponent()];
}

// ---------------------------------------------------------------- operations

ZqElem char_eval(const CharacterCtx& ctx, const CharIndex& chi, const FqElem& x) { return ctx.eval(chi, x); }

GaussSumValue gauss_sum(const CharacterCtx& ctx, const CharIndex& chi) {
    GaussSumValue v = ctx.gauss_sum_gk(chi);
    v.full = ctx.gauss_sum_direct(chi);
    if (!chi.is_trivial() && !valuation(*v.full)) throw std::runtime_error("gauss_sum: precision exhausted");
    return v;
}

GaussProduct::GaussProduct(const CharacterCtx& ctx) : ctx_(&ctx), unit_(ctx.zq().one()) {}

GaussProduct& GaussProduct::mul(const CharIndex& chi) {
    const auto& g = ctx_->gauss_sum_gk(chi);
    sign_ = -sign_;
    pi_exp_ += g.s;
    unit_ = unit_ * g.unit;
    return *this;
}

GaussProduct& GaussProduct::div(const CharIndex& chi) {
    const auto& g = ctx_->gauss_sum_gk(chi);
    sign_ = -sign_;
    pi_exp_ -= g.s;
    unit_ = unit_ * g.unit.inverse();
    return *this;
}

GaussProduct& GaussProduct::scale(const ZqElem& z) {
    unit_ = unit_ * z;
    return *this;
}

PadicRationalZq GaussProduct::value() const {
    const std::int64_t pm1 = ctx_->field().p() - 1;
    if (pi_exp_ % pm1 != 0) throw std::logic_error("GaussProduct: pi-exponent is not a multiple of p-1");
    const std::int64_t m = pi_exp_ / pm1;
    int s = sign_ * ((m % 2 == 0) ? 1 : -1);
    ZqElem u = s > 0 ? unit_ : -unit_;
    return PadicRationalZq(u, m, m + ctx_->precision());
}

ZqElem jacobi_sum(const CharacterCtx& ctx, const CharIndex& a, const CharIndex& b) {
    const auto& f = ctx.field();
    ZqElem sum = ctx.zq().zero();
    const std::uint32_t one = 1;
    for (std::uint32_t x = 2; x < f.q(); ++x) {
        std::uint32_t y = f.add_code(one, f.neg_code(x));
        if (y == 0) continue;
        sum += ctx.eval(a.exponent(), x) * ctx.eval(b.exponent(), y);
    }
    return sum;
}

PadicRationalZq binomial(const CharacterCtx& ctx, const CharIndex& a, const CharIndex& b) {
    ZqElem j = jacobi_sum(ctx, a, b.inverse());
    if (b.at_minus_one() < 0) j = -j;
    const std::int64_t r = ctx.field().r();
    return PadicRationalZq(j, -r, -r + ctx.zq().precision());
}

bool theta_expansion_check(const CharacterCtx& ctx, const FqElem& alpha) {
    if (alpha.is_zero()) throw std::domain_error("theta_expansion_check: alpha must be nonzero");
    const auto& eis = ctx.eis();
    const std::uint32_t n = ctx.group_order();
    EisElem sum = eis.zero();
    for (std::uint32_t m = 0; m < n; ++m) sum += ctx.gauss_sum_direct(ctx.chi(-static_cast<std::int64_t>(m))) * ctx.eval(m, alpha.code());
    EisElem rhs = sum * ctx.zq().from_int(n).inverse();
    return rhs == ctx.zeta_power(trace(alpha));
}

ZqElem orthogonality_check(const CharacterCtx& ctx, const FqElem& x) {
    ZqElem sum = ctx.zq().zero();
    for (std::uint32_t a = 0; a < ctx.group_order(); ++a) sum += ctx.eval(a, x.code());
    return sum;
}

PadicRationalZq char_sum_C(const CharacterCtx& ctx, int d, int k, const FqElem& alpha) {
    if (alpha.is_zero()) throw std::domain_error("char_sum_C: alpha must be nonzero");
    const std::int64_t p = ctx.field().p();
    if (d <= k || k < 1 || (static_cast<std::int64_t>(d) * k * (d - k)) % p == 0)
        throw std::invalid_argument("char_sum_C: requires d > k >= 1 and p not dividing dk(d-k)");
    PadicRationalZq sum = PadicRationalZq::from_int(ctx.zq(), 0);
    for (std::uint32_t a = 0; a < ctx.group_order(); ++a) {
        CharIndex chi = ctx.chi(a);
        GaussProduct gp(ctx);
        gp.mul(chi.pow(d)).mul(chi.pow(d - k).inverse()).div(chi.pow(k)).scale(ctx.eval(chi, alpha));
        PadicRationalZq term = gp.value();
        if (!term.is_zero() && term.valuation() < 0) throw std::logic_error("char_sum_C: negative valuation");
        sum += term;
    }
    return sum;
}

std::complex<double> complex_gauss_sum(const FieldCtx& field, std::uint32_t a) {
    const u64 n = field.q() - 1;
    const double p = field.p();
    std::complex<double> sum = 0;
    for (std::uint32_t x = 1; x < field.q(); ++x) {
        double frac = static_cast<double>(mulmod(a % n, field.dlog_code(x), n)) / static_cast<double>(n);
        double phase = 2 * std::numbers::pi * (frac + field.trace_code(x) / p);
        sum += std::polar(1.0, phase);
    }
    return sum;
}

}  // namespace hypfq
