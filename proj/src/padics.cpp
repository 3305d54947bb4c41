#include "hypfq/padics.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hypfq {

int default_precision(std::uint32_t p, int r) {
    long double q = static_cast<long double>(checked_pow(p, r));
    long double b = q + 1 + 2 * std::sqrt(q);
    long double bound = 4 * b * b;
    int m = 1;
    long double pm = p;
    while (!(pm > bound)) {
        pm *= p;
        ++m;
    }
    return m;
}

// ---------------------------------------------------------------- PadicInt

PadicInt::PadicInt(std::uint32_t p, int prec, std::int64_t value)
    : mod_(checked_pow(p, prec)), p_(p), prec_(prec) {
    if (prec < 1) throw std::invalid_argument("PadicInt: precision must be >= 1");
    residue_ = reduce_signed(value, mod_);
}

PadicInt PadicInt::raw(std::uint32_t p, int prec, u64 mod, u64 residue) {
    PadicInt x;
    x.p_ = p;
    x.prec_ = prec;
    x.mod_ = mod;
    x.residue_ = residue;
    return x;
}

void PadicInt::check_same(const PadicInt& o) const {
    if (p_ != o.p_ || prec_ != o.prec_) throw std::invalid_argument("PadicInt: mismatched prime or precision");
}

PadicInt PadicInt::operator+(const PadicInt& o) const {
    check_same(o);
    return raw(p_, prec_, mod_, addmod(residue_, o.residue_, mod_));
}

PadicInt PadicInt::operator-(const PadicInt& o) const {
    check_same(o);
    return raw(p_, prec_, mod_, submod(residue_, o.residue_, mod_));
}

PadicInt PadicInt::operator-() const { return raw(p_, prec_, mod_, submod(0, residue_, mod_)); }

PadicInt PadicInt::operator*(const PadicInt& o) const {
    check_same(o);
    return raw(p_, prec_, mod_, mulmod(residue_, o.residue_, mod_));
}

PadicInt PadicInt::inverse() const {
    if (!is_unit()) throw std::domain_error("PadicInt: inverse of a non-unit");
    return raw(p_, prec_, mod_, invmod(residue_, mod_));
}

bool PadicInt::operator==(const PadicInt& o) const {
    check_same(o);
    return residue_ == o.residue_;
}

std::string PadicInt::str() const {
    return std::to_string(residue_) + " mod " + std::to_string(p_) + "^" + std::to_string(prec_);
}

// ---------------------------------------------------------------- Gamma_p

GammaTable::GammaTable(std::uint32_t p, int prec) : p_(p), prec_(prec), mod_(checked_pow(p, prec)) {
    if (mod_ > std::numeric_limits<std::uint32_t>::max()) throw std::length_error("GammaTable: modulus exceeds 32 bits");
    values_.resize(mod_);
    u64 g = 1 % mod_;
    values_[0] = static_cast<std::uint32_t>(g);
    for (u64 m = 0; m + 1 < mod_; ++m) {
        if (m % p != 0)
            g = mulmod(mod_ - m, g, mod_);
        else
            g = submod(0, g, mod_);
        values_[m + 1] = static_cast<std::uint32_t>(g);
    }
}

u64 GammaTable::at(const Rational& x) const {
    if (x.den() % static_cast<std::int64_t>(p_) == 0)
        throw std::domain_error("gamma_p: denominator of " + x.str() + " is divisible by " + std::to_string(p_));
    u64 n = reduce_signed(x.num(), mod_);
    u64 d = reduce_signed(x.den(), mod_);
    return values_[mulmod(n, invmod(d, mod_), mod_)];
}

namespace {

std::mutex g_gamma_mutex;
std::map<std::uint32_t, std::shared_ptr<const GammaTable>> g_gamma_cache;
u64 g_gamma_budget = u64{1} << 27;

}  // namespace

void set_gamma_budget(u64 max_entries) {
    std::lock_guard lock(g_gamma_mutex);
    g_gamma_budget = max_entries;
}

u64 gamma_budget() {
    std::lock_guard lock(g_gamma_mutex);
    return g_gamma_budget;
}

std::shared_ptr<const GammaTable> gamma_table(std::uint32_t p, int prec) {
    if (prec < 1) throw std::invalid_argument("gamma_table: precision must be >= 1");
    std::lock_guard lock(g_gamma_mutex);
    auto it = g_gamma_cache.find(p);
    if (it != g_gamma_cache.end() && it->second->precision() >= prec) return it->second;
    u64 size = 0;
    try {
        size = checked_pow(p, prec);
    } catch (const std::overflow_error&) {
        size = std::numeric_limits<u64>::max();
    }
    if (size > g_gamma_budget)
        throw std::length_error("gamma_p: table for " + std::to_string(p) + "^" + std::to_string(prec) +
                                " exceeds the budget of " + std::to_string(g_gamma_budget) + " entries");
    auto table = std::make_shared<const GammaTable>(p, prec);
    g_gamma_cache[p] = table;
    return table;
}

PadicInt gamma_p(const Rational& x, std::uint32_t p, int prec) {
    auto table = gamma_table(p, prec);
    u64 v = table->at(x) % checked_pow(p, prec);
    return PadicInt(p, prec, static_cast<std::int64_t>(v));
}

// ---------------------------------------------------------------- Z_q

ZqCtx::ZqCtx(std::shared_ptr<const FieldCtx> field, int prec) : field_(std::move(field)), prec_(prec) {
    if (field_->r() > kMaxDegree) throw std::invalid_argument("ZqCtx: extension degree too large");
    if (prec < 1 || prec > max_storage_precision(field_->p()))
        throw std::invalid_argument("ZqCtx: precision out of range");
    mod_ = checked_pow(field_->p(), prec);
    const auto& f = field_->modulus();
    for (std::size_t i = 0; i < f.size(); ++i) lifted_[i] = f[i];
}

ZqElem ZqCtx::zero() const { return ZqElem(this); }

ZqElem ZqCtx::one() const { return from_int(1); }

ZqElem ZqCtx::from_int(std::int64_t n) const {
    ZqElem z(this);
    z.set_coeff(0, reduce_signed(n, mod_));
    return z;
}

ZqElem ZqCtx::lift(const FqElem& t) const {
    if (t.ctx_ptr() != field_.get()) throw std::invalid_argument("ZqCtx::lift: element from another field");
    ZqElem z(this);
    auto d = t.coeffs();
    for (int i = 0; i < r(); ++i) z.set_coeff(i, d[i]);
    return z;
}

void ZqElem::check_same(const ZqElem& o) const {
    if (ctx_ == nullptr || ctx_ != o.ctx_) throw std::invalid_argument("ZqElem: mismatched contexts");
}

std::vector<u64> ZqElem::coeffs() const { return std::vector<u64>(c_.begin(), c_.begin() + ctx_->r()); }

bool ZqElem::is_zero() const {
    for (int i = 0; i < ctx_->r(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

int ZqElem::ord() const {
    const u64 p = ctx_->p();
    int best = ctx_->precision();
    for (int i = 0; i < ctx_->r(); ++i) {
        u64 c = c_[i];
        if (c == 0) continue;
        int v = 0;
        while (c % p == 0) {
            c /= p;
            ++v;
        }
        best = std::min(best, v);
    }
    return best;
}

ZqElem ZqElem::operator+(const ZqElem& o) const {
    ZqElem z = *this;
    z += o;
    return z;
}

ZqElem ZqElem::operator-(const ZqElem& o) const {
    ZqElem z = *this;
    z -= o;
    return z;
}

ZqElem& ZqElem::operator+=(const ZqElem& o) {
    check_same(o);
    const u64 m = ctx_->modulus();
    for (int i = 0; i < ctx_->r(); ++i) c_[i] = addmod(c_[i], o.c_[i], m);
    return *this;
}

ZqElem& ZqElem::operator-=(const ZqElem& o) {
    check_same(o);
    const u64 m = ctx_->modulus();
    for (int i = 0; i < ctx_->r(); ++i) c_[i] = submod(c_[i], o.c_[i], m);
    return *this;
}

ZqElem ZqElem::operator-() const {
    ZqElem z(ctx_);
    const u64 m = ctx_->modulus();
    for (int i = 0; i < ctx_->r(); ++i) z.c_[i] = submod(0, c_[i], m);
    return z;
}

ZqElem ZqElem::operator*(const ZqElem& o) const {
    check_same(o);
    const int r = ctx_->r();
    const u64 m = ctx_->modulus();
    ZqElem z(ctx_);
    if (r == 1) {
        z.c_[0] = mulmod(c_[0], o.c_[0], m);
        return z;
    }
    std::array<u64, 2 * kMaxDegree> prod{};
    for (int i = 0; i < r; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < r; ++j) prod[i + j] = addmod(prod[i + j], mulmod(c_[i], o.c_[j], m), m);
    }
    const auto& f = ctx_->lifted_modulus();
    for (int d = 2 * r - 2; d >= r; --d) {
        u64 lead = prod[d];
        if (lead == 0) continue;
        for (int j = 0; j < r; ++j) prod[d - r + j] = submod(prod[d - r + j], mulmod(lead, f[j], m), m);
    }
    for (int i = 0; i < r; ++i) z.c_[i] = prod[i];
    return z;
}

ZqElem ZqElem::scaled(u64 s) const {
    ZqElem z(ctx_);
    const u64 m = ctx_->modulus();
    s %= m;
    for (int i = 0; i < ctx_->r(); ++i) z.c_[i] = mulmod(c_[i], s, m);
    return z;
}

ZqElem ZqElem::scaled_signed(std::int64_t s) const { return scaled(reduce_signed(s, ctx_->modulus())); }

void ZqElem::add_scaled(const ZqElem& o, u64 s) {
    const u64 m = ctx_->modulus();
    for (int i = 0; i < ctx_->r(); ++i) c_[i] = addmod(c_[i], mulmod(o.c_[i], s, m), m);
}

ZqElem ZqElem::pow(u64 e) const {
    ZqElem result = ctx_->one();
    ZqElem base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

ZqElem ZqElem::inverse() const {
    FqElem red = reduce();
    if (red.is_zero()) throw std::domain_error("ZqElem: inverse of a non-unit");
    ZqElem z = ctx_->lift(red.inverse());
    ZqElem two = ctx_->from_int(2);
    for (int it = 0; it < 64; ++it) {
        ZqElem next = z * (two - *this * z);
        if (next == z) return z;
        z = next;
    }
    throw std::logic_error("ZqElem::inverse: Newton iteration did not converge");
}

ZqElem ZqElem::divided_by_p(int k) const {
    u64 pk = checked_pow(ctx_->p(), k);
    ZqElem z(ctx_);
    for (int i = 0; i < ctx_->r(); ++i) {
        if (c_[i] % pk != 0) throw std::domain_error("ZqElem: not divisible by p^k");
        z.c_[i] = c_[i] / pk;
    }
    return z;
}

ZqElem ZqElem::times_p(int k) const {
    if (k >= ctx_->precision()) return ctx_->zero();
    return scaled(checked_pow(ctx_->p(), k));
}

bool ZqElem::operator==(const ZqElem& o) const {
    check_same(o);
    for (int i = 0; i < ctx_->r(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

bool ZqElem::congruent(const ZqElem& o, int m) const {
    check_same(o);
    if (m >= ctx_->precision()) return *this == o;
    if (m <= 0) return true;
    u64 pm = checked_pow(ctx_->p(), m);
    for (int i = 0; i < ctx_->r(); ++i)
        if (c_[i] % pm != o.c_[i] % pm) return false;
    return true;
}

FqElem ZqElem::reduce() const {
    const auto& f = ctx_->field();
    std::vector<std::uint32_t> d(ctx_->r());
    for (int i = 0; i < ctx_->r(); ++i) d[i] = static_cast<std::uint32_t>(c_[i] % f.p());
    return f.from_coeffs(d);
}

std::string ZqElem::str(int m) const {
    u64 mod = (m < 0 || m >= ctx_->precision()) ? ctx_->modulus() : checked_pow(ctx_->p(), m);
    if (ctx_->r() == 1) return std::to_string(c_[0] % mod);
    std::string s = "[";
    for (int i = 0; i < ctx_->r(); ++i) {
        if (i) s += ',';
        s += std::to_string(c_[i] % mod);
    }
    return s + "]";
}

ZqElem teichmuller(const FqElem& t, const ZqCtx& ctx) {
    if (t.is_zero()) throw std::domain_error("teichmuller: zero has no Teichmuller lift");
    ZqElem z = ctx.lift(t);
    const u64 q = ctx.field().q();
    for (int it = 0; it <= ctx.precision() + 1; ++it) {
        ZqElem next = z.pow(q);
        if (next == z) return z;
        z = next;
    }
    throw std::logic_error("teichmuller: iteration did not stabilize");
}

// ---------------------------------------------------------------- p^v * u

namespace {

constexpr std::int64_t kExactPrecision = std::int64_t{1} << 40;

}  // namespace

PadicRationalZq::PadicRationalZq(const ZqElem& u, std::int64_t v, std::int64_t prec) : u_(u), v_(v), prec_(prec) {
    normalize();
}

void PadicRationalZq::normalize() {
    const int n = u_.ctx().precision();
    if (prec_ > v_ + n) prec_ = v_ + n;
    std::int64_t rel = prec_ - v_;
    int k = u_.ord();
    if (rel <= 0 || k >= rel) {
        u_ = u_.ctx().zero();
        v_ = prec_;
        return;
    }
    if (k > 0) {
        u_ = u_.divided_by_p(k);
        v_ += k;
        rel -= k;
    }
    if (rel < n) {
        u64 pm = checked_pow(u_.ctx().p(), static_cast<int>(rel));
        for (int i = 0; i < u_.ctx().r(); ++i) u_.set_coeff(i, u_.coeff(i) % pm);
    }
}

PadicRationalZq PadicRationalZq::zero(const ZqCtx& ctx, std::int64_t prec) {
    return PadicRationalZq(ctx.zero(), prec, prec);
}

PadicRationalZq PadicRationalZq::from_int(const ZqCtx& ctx, std::int64_t n) {
    if (n == 0) return zero(ctx, kExactPrecision);
    int v = ord_p(n, ctx.p());
    std::int64_t m = n;
    for (int i = 0; i < v; ++i) m /= static_cast<std::int64_t>(ctx.p());
    return PadicRationalZq(ctx.from_int(m), v, v + ctx.precision());
}

PadicRationalZq PadicRationalZq::from_rational(const ZqCtx& ctx, const Rational& x) {
    if (x.num() == 0) return zero(ctx, kExactPrecision);
    auto num = from_int(ctx, x.num());
    auto den = from_int(ctx, x.den());
    return num / den;
}

PadicRationalZq PadicRationalZq::operator+(const PadicRationalZq& o) const {
    if (u_.ctx_ptr() != o.u_.ctx_ptr()) throw std::invalid_argument("PadicRationalZq: mismatched contexts");
    std::int64_t m = std::min(v_, o.v_);
    std::int64_t prec = std::min(prec_, o.prec_);
    const int n = u_.ctx().precision();
    auto shift = [&](const ZqElem& z, std::int64_t k) { return k >= n ? z.ctx().zero() : z.times_p(static_cast<int>(k)); };
    ZqElem sum = shift(u_, v_ - m) + shift(o.u_, o.v_ - m);
    return PadicRationalZq(sum, m, prec);
}

PadicRationalZq PadicRationalZq::operator-() const {
    PadicRationalZq r = *this;
    r.u_ = -u_;
    return r;
}

PadicRationalZq PadicRationalZq::operator-(const PadicRationalZq& o) const { return *this + (-o); }

PadicRationalZq PadicRationalZq::operator*(const PadicRationalZq& o) const {
    if (u_.ctx_ptr() != o.u_.ctx_ptr()) throw std::invalid_argument("PadicRationalZq: mismatched contexts");
    std::int64_t prec = std::min(prec_ + o.v_, o.prec_ + v_);
    return PadicRationalZq(u_ * o.u_, v_ + o.v_, prec);
}

PadicRationalZq PadicRationalZq::inverse() const {
    if (is_zero()) throw std::domain_error("PadicRationalZq: inverse of zero at precision");
    std::int64_t rel = prec_ - v_;
    return PadicRationalZq(u_.inverse(), -v_, -v_ + rel);
}

PadicRationalZq PadicRationalZq::operator/(const PadicRationalZq& o) const { return *this * o.inverse(); }

PadicRationalZq PadicRationalZq::with_precision(std::int64_t prec) const {
    return PadicRationalZq(u_, v_, std::min(prec, prec_));
}

std::optional<std::int64_t> PadicRationalZq::to_integer(std::int64_t lo, std::int64_t hi) const {
    const u64 p = u_.ctx().p();
    // The range must be separated at this precision.
    u128 span = static_cast<u128>(4) * static_cast<u128>(std::max(std::abs(lo), std::abs(hi)));
    u128 pp = 1;
    for (std::int64_t i = 0; i < prec_ && pp <= span; ++i) pp *= p;
    if (prec_ < 0 || pp <= span) return std::nullopt;

    if (is_zero()) {
        if (lo <= 0 && 0 <= hi) return 0;
        return std::nullopt;
    }
    if (v_ < 0) return std::nullopt;
    std::int64_t rel = prec_ - v_;
    u64 pm = checked_pow(p, static_cast<int>(rel));
    for (int i = 1; i < u_.ctx().r(); ++i)
        if (u_.coeff(i) % pm != 0) return std::nullopt;
    u64 res = u_.coeff(0) % pm;
    std::int64_t s = res > pm / 2 ? -static_cast<std::int64_t>(pm - res) : static_cast<std::int64_t>(res);
    if (static_cast<u128>(4) * static_cast<u128>(std::abs(s)) > pm) return std::nullopt;
    __int128 value = s;
    for (std::int64_t i = 0; i < v_; ++i) {
        value *= static_cast<__int128>(p);
        if (value > hi || value < lo) return std::nullopt;
    }
    if (value < lo || value > hi) return std::nullopt;
    return static_cast<std::int64_t>(value);
}

std::string PadicRationalZq::residue_str() const {
    std::int64_t rel = prec_ - v_;
    if (is_zero()) return "0";
    return u_.str(static_cast<int>(rel));
}

std::string PadicRationalZq::str() const {
    const std::string p = std::to_string(u_.ctx().p());
    if (is_zero()) {
        if (prec_ >= kExactPrecision) return "0";
        return "0 mod " + p + "^" + std::to_string(prec_);
    }
    std::string unit = residue_str() + " mod " + p + "^" + std::to_string(prec_ - v_);
    if (v_ == 0) return unit;
    return p + "^" + std::to_string(v_) + " * (" + unit + ")";
}

// ---------------------------------------------------------------- Z_q[pi]

namespace {

u128 binomial_exact(u64 n, u64 k) {
    u128 c = 1;
    for (u64 i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

}  // namespace

EisCtx::EisCtx(const ZqCtx& zq) : zq_(&zq) {
    const u64 p = zq.p();
    if (p > 61) throw std::invalid_argument("EisCtx: prime too large for the Eisenstein ring");
    const u64 m = zq.modulus();

    // w^{p-1} = 1 + sum_{j=1}^{p-2} (C(p, j+1)/p) pi^j w^j, w = 1 mod pi.
    std::vector<u64> c(p, 0);
    for (u64 j = 1; j + 2 <= p; ++j) c[j] = static_cast<u64>(binomial_exact(p, j + 1) / p % m);
    auto eval = [&](const EisElem& w) {
        EisElem f = w.pow(p - 1) - one();
        EisElem df = w.pow(p - 2) * zq.from_int(static_cast<std::int64_t>(p - 1));
        EisElem wj = one();
        for (u64 j = 1; j + 2 <= p; ++j) {
            EisElem term = pi().times_pi_power(static_cast<std::int64_t>(j) - 1) * zq.from_int(1).scaled(c[j]);
            f = f - term * (wj * w);
            df = df - term * wj * zq.from_int(static_cast<std::int64_t>(j));
            wj = wj * w;
        }
        return std::pair{f, df};
    };
    EisElem w = one();
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
        auto [f, df] = eval(w);
        EisElem next = w - f * df.inverse_unit();
        if (next == w) {
            converged = true;
            break;
        }
        w = next;
    }
    if (!converged) throw std::logic_error("zeta_p: Hensel iteration did not converge");
    EisElem z = one() + pi() * w;
    if (!(z.pow(p) == one()) || z == one()) throw std::logic_error("zeta_p: lifted root fails zeta^p = 1");
    zeta_ = std::make_shared<EisElem>(z);
}

EisElem EisCtx::zero() const { return EisElem(this); }

EisElem EisCtx::one() const { return from_zq(zq_->one()); }

EisElem EisCtx::pi() const {
    EisElem e(this);
    if (degree() == 1)
        e.set_coeff(0, zq_->from_int(-static_cast<std::int64_t>(p())));
    else
        e.set_coeff(1, zq_->one());
    return e;
}

EisElem EisCtx::from_zq(const ZqElem& z) const {
    EisElem e(this);
    e.set_coeff(0, z);
    return e;
}

const EisElem& EisCtx::zeta() const { return *zeta_; }

EisElem::EisElem(const EisCtx* ctx) : ctx_(ctx), c_(ctx->degree(), ctx->zq().zero()) {}

EisElem EisElem::operator+(const EisElem& o) const {
    EisElem e = *this;
    e += o;
    return e;
}

EisElem& EisElem::operator+=(const EisElem& o) {
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
}

EisElem EisElem::operator-(const EisElem& o) const {
    EisElem e = *this;
    for (std::size_t j = 0; j < c_.size(); ++j) e.c_[j] -= o.c_[j];
    return e;
}

EisElem EisElem::operator-() const {
    EisElem e(ctx_);
    for (std::size_t j = 0; j < c_.size(); ++j) e.c_[j] = -c_[j];
    return e;
}

EisElem EisElem::operator*(const EisElem& o) const {
    const int n = ctx_->degree();
    const ZqCtx& zq = ctx_->zq();
    std::vector<ZqElem> prod(2 * n - 1, zq.zero());
    for (int i = 0; i < n; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; j < n; ++j)
            if (!o.c_[j].is_zero()) prod[i + j] += c_[i] * o.c_[j];
    }
    EisElem e(ctx_);
    const u64 m = zq.modulus();
    const u64 minus_p = m - ctx_->p();
    for (int k = 0; k < 2 * n - 1; ++k) {
        if (k < n)
            e.c_[k] += prod[k];
        else
            e.c_[k - n].add_scaled(prod[k], minus_p);
    }
    return e;
}

EisElem EisElem::operator*(const ZqElem& z) const {
    EisElem e(ctx_);
    for (std::size_t j = 0; j < c_.size(); ++j) e.c_[j] = c_[j] * z;
    return e;
}

EisElem EisElem::pow(u64 e) const {
    EisElem result = ctx_->one();
    EisElem base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

EisElem EisElem::times_pi_power(std::int64_t s) const {
    if (s < 0) throw std::domain_error("times_pi_power: negative exponent");
    const int n = ctx_->degree();
    const u64 m = ctx_->zq().modulus();
    EisElem e = *this;
    for (std::int64_t k = 0; k < s % n; ++k) {
        EisElem next(ctx_);
        for (int j = 0; j + 1 < n; ++j) next.c_[j + 1] = e.c_[j];
        next.c_[0].add_scaled(e.c_[n - 1], m - ctx_->p());
        e = next;
    }
    std::int64_t full = s / n;
    if (full > 0) {
        ZqElem scale = ctx_->zq().from_int(-static_cast<std::int64_t>(ctx_->p()));
        e = e * scale.pow(static_cast<u64>(full));
    }
    return e;
}

EisElem EisElem::inverse_unit() const {
    EisElem z = ctx_->from_zq(c_[0].inverse());
    EisElem two = ctx_->from_zq(ctx_->zq().from_int(2));
    for (int it = 0; it < 200; ++it) {
        EisElem next = z * (two - *this * z);
        if (next == z) return z;
        z = next;
    }
    throw std::logic_error("EisElem::inverse_unit: Newton iteration did not converge");
}

bool EisElem::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool EisElem::operator==(const EisElem& o) const {
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (c_[j] != o.c_[j]) return false;
    return true;
}

bool EisElem::congruent(const EisElem& o, int m) const {
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (!c_[j].congruent(o.c_[j], m)) return false;
    return true;
}

std::string EisElem::str(int m) const {
    std::string s = "[";
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (j) s += ", ";
        std::string z = c_[j].str(m);
        s += (z.front() == '[') ? z : "[" + z + "]";
    }
    return s + "]";
}

std::optional<Rational> valuation(const EisElem& x, int m) {
    const ZqCtx& zq = x.ctx().zq();
    const int prec = (m < 0 || m > zq.precision()) ? zq.precision() : m;
    const u64 pm = checked_pow(zq.p(), prec);
    const int n = x.ctx().degree();
    std::optional<Rational> best;
    for (int j = 0; j < n; ++j) {
        const ZqElem& c = x.coeff(j);
        int ordj = prec;
        for (int i = 0; i < zq.r(); ++i) {
            u64 v = c.coeff(i) % pm;
            if (v == 0) continue;
            int o = 0;
            while (v % zq.p() == 0) {
                v /= zq.p();
                ++o;
            }
            ordj = std::min(ordj, o);
        }
        if (ordj >= prec) continue;
        Rational val = Rational(j, n) + Rational(ordj);
        if (!best || val < *best) best = val;
    }
    return best;
}

}  // namespace hypfq
