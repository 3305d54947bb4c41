#include "hypfq/hypergeo.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hypfq {

void GParams::validate(std::uint32_t p) const {
    if (top.empty() || top.size() != bottom.size())
        throw std::invalid_argument("GParams: top and bottom lists must be nonempty and of equal length");
    auto check = [p](const Rational& x) {
        if (x.den() % static_cast<std::int64_t>(p) == 0)
            throw std::invalid_argument("GParams: denominator of " + x.str() + " is divisible by p=" + std::to_string(p));
    };
    std::for_each(top.begin(), top.end(), check);
    std::for_each(bottom.begin(), bottom.end(), check);
}

std::string GParams::str() const {
    auto join = [](const std::vector<Rational>& v) {
        std::string s;
        for (const auto& x : v) {
            if (!s.empty()) s += ',';
            s += x.str();
        }
        return s;
    };
    return "[" + join(top) + "; " + join(bottom) + "]";
}

// ---------------------------------------------------------------- nGn

GnEvaluator::GnEvaluator(const CharacterCtx& ctx, GParams params, int precision)
    : ctx_(&ctx), params_(std::move(params)), precision_(precision < 0 ? ctx.precision() : precision) {
    const auto& f = ctx.field();
    const std::uint32_t p = f.p();
    const int r = f.r();
    const std::int64_t n = f.q() - 1;
    const std::size_t len = params_.n();
    params_.validate(p);

    std::vector<std::int64_t> ppow(r);
    ppow[0] = 1;
    for (int i = 1; i < r; ++i) ppow[i] = ppow[i - 1] * p;

    // A_{k,i} = <a_k p^i>, B_{k,i} = <-b_k p^i>.
    std::vector<Rational> A(len * r), B(len * r);
    for (std::size_t k = 0; k < len; ++k)
        for (int i = 0; i < r; ++i) {
            A[k * r + i] = (params_.top[k] * Rational(ppow[i])).frac();
            B[k * r + i] = (-params_.bottom[k] * Rational(ppow[i])).frac();
        }

    exponents_.resize(n);
    for (std::int64_t a = 0; a < n; ++a) {
        std::int64_t e = 0;
        for (int i = 0; i < r; ++i) {
            Rational x(a * ppow[i], n);
            for (std::size_t k = 0; k < len; ++k) {
                std::int64_t term = -(A[k * r + i] - x).floor() - (B[k * r + i] + x).floor();
                if (term < -1 || term > 1) throw std::logic_error("gn_eval: (-p)-exponent outside {-1,0,1}");
                e += term;
            }
        }
        exponents_[a] = e;
    }
    e_min_ = *std::min_element(exponents_.begin(), exponents_.end());
    table_precision_ = precision_ - static_cast<int>(std::min<std::int64_t>(0, e_min_));
    if (table_precision_ > ctx.zq().precision())
        throw std::length_error("gn_eval: precision exceeds the Z_q storage precision");

    auto table = gamma_table(p, table_precision_);
    const u64 pm = checked_pow(p, table_precision_);
    const u64 mod = ctx.zq().modulus();

    u64 denom = 1;
    for (std::size_t k = 0; k < len; ++k)
        for (int i = 0; i < r; ++i) {
            denom = mulmod(denom, table->at(A[k * r + i]) % pm, pm);
            denom = mulmod(denom, table->at(B[k * r + i]) % pm, pm);
        }
    const u64 inv_denom = invmod(denom, pm);
    const u64 outer = submod(0, invmod(static_cast<u64>(n) % mod, mod), mod);

    coeffs_.resize(n);
    for (std::int64_t a = 0; a < n; ++a) {
        u64 unit = inv_denom;
        for (int i = 0; i < r; ++i) {
            Rational x(a * ppow[i], n);
            for (std::size_t k = 0; k < len; ++k) {
                unit = mulmod(unit, table->at((A[k * r + i] - x).frac()) % pm, pm);
                unit = mulmod(unit, table->at((B[k * r + i] + x).frac()) % pm, pm);
            }
        }
        const std::int64_t e = exponents_[a];
        const bool negative = ((a * static_cast<std::int64_t>(len) + e) % 2 + 2) % 2 == 1;
        u64 c = mulmod(unit, checked_pow(p, static_cast<int>(e - e_min_)), mod);
        if (negative) c = submod(0, c, mod);
        coeffs_[a] = mulmod(c, outer, mod);
    }
}

PadicRationalZq GnEvaluator::at_code(std::uint32_t code) const {
    const ZqCtx& zq = ctx_->zq();
    const std::int64_t prec = e_min_ + table_precision_;
    // omega-bar^a(0) = 0 for every a, the trivial character included.
    if (code == 0) return PadicRationalZq::zero(zq, prec);
    const u64 n = ctx_->group_order();
    const u64 j = ctx_->field().dlog_code(code);
    ZqElem sum = zq.zero();
    u64 idx = 0;  // (-a j) mod n
    for (u64 a = 0; a < n; ++a) {
        sum.add_scaled(ctx_->omega_power(idx), coeffs_[a]);
        idx = (idx + n - j) % n;
    }
    return PadicRationalZq(sum, e_min_, prec);
}

PadicRationalZq gn_eval(const CharacterCtx& ctx, const GParams& params, const FqElem& t, int precision) {
    return GnEvaluator(ctx, params, precision)(t);
}

// ---------------------------------------------------------------- Greene / McCarthy

void FParams::validate() const {
    if (top.empty() || top.size() != bottom.size() + 1)
        throw std::invalid_argument("FParams: expected n+1 top and n bottom characters");
}

GreeneF::GreeneF(const CharacterCtx& ctx, FParams params) : ctx_(&ctx), params_(std::move(params)) {
    params_.validate();
    const std::int64_t n = params_.bottom.size();
    const std::int64_t r = ctx.field().r();
    v_ = -r * n;
    ZqElem inv = ctx.zq().from_int(ctx.group_order()).inverse();
    coeffs_.reserve(ctx.group_order());
    for (std::uint32_t a = 0; a < ctx.group_order(); ++a) {
        CharIndex chi = ctx.chi(a);
        ZqElem c = inv;
        for (std::size_t i = 0; i <= params_.bottom.size(); ++i) {
            CharIndex top = params_.top[i] * chi;
            CharIndex bot = (i == 0) ? chi : params_.bottom[i - 1] * chi;
            ZqElem j = jacobi_sum(ctx, top, bot.inverse());
            c = c * (bot.at_minus_one() > 0 ? j : -j);
        }
        coeffs_.push_back(c);
    }
}

PadicRationalZq GreeneF::operator()(const FqElem& x) const {
    const ZqCtx& zq = ctx_->zq();
    ZqElem sum = zq.zero();
    if (!x.is_zero())
        for (std::uint32_t a = 0; a < ctx_->group_order(); ++a) sum += coeffs_[a] * ctx_->eval(a, x.code());
    return PadicRationalZq(sum, v_, v_ + zq.precision());
}

McCarthyFStar::McCarthyFStar(const CharacterCtx& ctx, FParams params) : ctx_(&ctx), params_(std::move(params)) {
    params_.validate();
    const std::size_t n = params_.bottom.size();
    coeffs_.reserve(ctx.group_order());
    for (std::uint32_t a = 0; a < ctx.group_order(); ++a) {
        CharIndex chi = ctx.chi(a);
        GaussProduct gp(ctx);
        for (const auto& A : params_.top) gp.mul(A * chi).div(A);
        for (const auto& B : params_.bottom) gp.mul((B * chi).inverse()).div(B.inverse());
        gp.mul(chi.inverse());
        if ((n + 1) % 2 == 1 && chi.at_minus_one() < 0) gp.scale(-ctx.zq().one());
        coeffs_.push_back(gp.value());
    }
}

PadicRationalZq McCarthyFStar::operator()(const FqElem& x) const {
    const ZqCtx& zq = ctx_->zq();
    PadicRationalZq sum = PadicRationalZq::from_int(zq, 0);
    if (x.is_zero()) return sum;
    for (std::uint32_t a = 0; a < ctx_->group_order(); ++a)
        sum += coeffs_[a] * PadicRationalZq(ctx_->eval(a, x.code()), 0, zq.precision());
    return sum * PadicRationalZq::from_rational(zq, Rational(-1, ctx_->group_order()));
}

PadicRationalZq greene_f(const CharacterCtx& ctx, const FParams& params, const FqElem& x) {
    return GreeneF(ctx, params)(x);
}

PadicRationalZq mccarthy_fstar(const CharacterCtx& ctx, const FParams& params, const FqElem& x) {
    return McCarthyFStar(ctx, params)(x);
}

// ---------------------------------------------------------------- Section 5 helpers

PadicRationalZq phi_value(const CharacterCtx& ctx, const FqElem& x) {
    return PadicRationalZq::from_int(ctx.zq(), legendre(x));
}

namespace {

GParams gp(std::vector<Rational> top, std::vector<Rational> bottom) { return GParams{std::move(top), std::move(bottom)}; }

PadicRationalZq inv_q(const CharacterCtx& ctx) {
    return PadicRationalZq::from_rational(ctx.zq(), Rational(1, ctx.field().q()));
}

}  // namespace

ValuePair g_shift_3to2(const CharacterCtx& ctx, const FqElem& x, int precision) {
    GnEvaluator g3(ctx, gp({{1, 4}, {1, 2}, {3, 4}}, {0, {1, 2}, {1, 2}}), precision);
    GnEvaluator g2(ctx, gp({{1, 4}, {3, 4}}, {0, {1, 2}}), precision);
    return {g3(x), g2(x) + phi_value(ctx, x) * inv_q(ctx)};
}

ValuePair g2_transforms(const CharacterCtx& ctx, const FqElem& t, int which, int precision) {
    const auto& f = ctx.field();
    switch (which) {
        case 1: {
            if (t.is_zero()) throw std::invalid_argument("g2_transforms(1): t must be nonzero");
            GnEvaluator lhs(ctx, gp({{1, 4}, {3, 4}}, {{1, 2}, {1, 2}}), precision);
            GnEvaluator rhs(ctx, gp({{1, 2}, {1, 2}}, {{1, 4}, {3, 4}}), precision);
            return {lhs(t), rhs(t.inverse())};
        }
        case 2: {
            GnEvaluator lhs(ctx, gp({{1, 4}, {3, 4}}, {{1, 2}, {1, 2}}), precision);
            GnEvaluator rhs(ctx, gp({{1, 4}, {3, 4}}, {0, 0}), precision);
            return {lhs(t), phi_value(ctx, -t) * inv_q(ctx) * rhs(t)};
        }
        case 3: {
            if (t.is_zero()) throw std::invalid_argument("g2_transforms(3): t must be nonzero");
            if (f.p() <= 3) throw std::invalid_argument("g2_transforms(3): requires p > 3");
            GnEvaluator lhs(ctx, gp({{1, 3}, {2, 3}}, {0, 0}), precision);
            GnEvaluator rhs(ctx, gp({{1, 2}, {1, 2}}, {{1, 6}, {5, 6}}), precision);
            PadicRationalZq q = PadicRationalZq::from_int(ctx.zq(), f.q());
            return {lhs(t), phi_value(ctx, -(f.from_int(3) * t)) * q * rhs(t.inverse())};
        }
        default:
            throw std::invalid_argument("g2_transforms: which must be 1, 2 or 3");
    }
}

}  // namespace hypfq
