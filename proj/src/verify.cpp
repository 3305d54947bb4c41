#include "hypfq/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hypfq/arith.hpp"
#include "hypfq/characters.hpp"
#include "hypfq/fields.hpp"
#include "hypfq/hypergeo.hpp"
#include "hypfq/padics.hpp"
#include "hypfq/rational.hpp"
#include "hypfq/varieties.hpp"
#include "json.hpp"

namespace hypfq {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skip: return "skip";
    }
    return "?";
}

std::int64_t Report::count(Status s) const {
    return std::count_if(records.begin(), records.end(), [s](const CheckRecord& r) { return r.status == s; });
}

std::map<std::string, std::map<std::string, std::int64_t>> Report::branch_coverage() const {
    std::map<std::string, std::map<std::string, std::int64_t>> out;
    for (const auto& r : records)
        if (!r.branch.empty() && r.status != Status::skip) ++out[r.id][r.branch];
    return out;
}

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids{
        "affine-projective",  "binomial-trivial",   "char-sum-c",        "complex-shadow",
        "diagonal-counts",    "diagonal-gn",        "even-summation",    "floor-d",
        "floor-l",            "fstar-bridge",       "g2-cubic-sum",       "g2-phi-sum",        "g2-transform",
        "g2-vanishing",       "g3-to-g2",           "gamma-half-square", "gamma-mult-minus",
        "gamma-mult-plus",    "gamma-phi-sum",      "gamma-phi-sum-bar", "gamma-reflection",
        "gauss-norm",         "greene-cubic-sum",   "gross-koblitz",     "hessian-sum",
        "jacobi-gauss",       "jacobi-reflection",  "legendre-trace-sum", "odd-summation",
        "orthogonality",      "phi-sum",            "theta-expansion",   "weierstrass-trace-sum",
    };
    return ids;
}

std::vector<std::string> resolve_suites(const std::vector<std::string>& names) {
    const auto& all = check_ids();
    std::set<std::string> chosen;
    for (const auto& n : names) {
        if (n == "all") {
            chosen.insert(all.begin(), all.end());
        } else if (n == "gk") {
            chosen.insert("gross-koblitz");
        } else if (std::find(all.begin(), all.end(), n) != all.end()) {
            chosen.insert(n);
        } else {
            throw std::invalid_argument("unknown suite '" + n + "'");
        }
    }
    std::vector<std::string> out;
    for (const auto& id : all)
        if (chosen.count(id)) out.push_back(id);
    return out;
}

namespace {

using Records = std::vector<CheckRecord>;
using PR = PadicRationalZq;

struct Env {
    std::shared_ptr<const FieldCtx> f;
    std::shared_ptr<const CharacterCtx> ctx;
    int M = 0;

    std::uint32_t p() const { return f->p(); }
    int r() const { return f->r(); }
    std::uint32_t q() const { return f->q(); }
    std::uint32_t n() const { return f->q() - 1; }
    const ZqCtx& zq() const { return ctx->zq(); }
    FqElem el(std::uint32_t code) const { return f->element(code); }
    PR num(std::int64_t v) const { return PR::from_int(zq(), v); }
    PR rat(std::int64_t a, std::int64_t b) const { return PR::from_rational(zq(), Rational(a, b)); }
};

CheckRecord make_record(const std::string& id, const Env& e,
                        std::vector<std::pair<std::string, std::int64_t>> extra = {}) {
    CheckRecord rec;
    rec.id = id;
    rec.params = {{"p", std::to_string(e.p())}, {"r", std::to_string(e.r())}};
    rec.key = {e.p(), e.r()};
    for (auto& [name, v] : extra) {
        rec.params.emplace_back(name, std::to_string(v));
        rec.key.push_back(v);
    }
    rec.precision = e.M;
    return rec;
}

CheckRecord skipped(CheckRecord rec, std::string reason) {
    rec.status = Status::skip;
    rec.reason = std::move(reason);
    return rec;
}

std::optional<std::int64_t> val_of(const PR& x) {
    if (x.is_zero()) return std::nullopt;
    return x.valuation();
}

bool agree(const PR& a, const PR& b, int target) {
    PR d = a - b;
    return d.is_zero() && d.precision() >= target;
}

// Folds the instances of a swept variable into one record.
class Tally {
public:
    explicit Tally(CheckRecord rec) : rec_(std::move(rec)) {}

    void add(bool ok, const std::string& where, const std::string& lhs, const std::string& rhs,
             std::optional<std::int64_t> lv = std::nullopt, std::optional<std::int64_t> rv = std::nullopt) {
        if (rec_.instances++ == 0) {
            rec_.lhs = lhs;
            rec_.rhs = rhs;
            rec_.lhs_valuation = lv;
            rec_.rhs_valuation = rv;
        }
        if (!ok) {
            rec_.status = Status::fail;
            if (rec_.diagnostics.size() < 50) rec_.diagnostics.push_back(where + ": " + lhs + " != " + rhs);
        }
    }
    void add(const PR& lhs, const PR& rhs, int target, const std::string& where) {
        add(agree(lhs, rhs, target), where, lhs.str(), rhs.str(), val_of(lhs), val_of(rhs));
    }
    void add(std::int64_t lhs, std::int64_t rhs, const std::string& where) {
        add(lhs == rhs, where, std::to_string(lhs), std::to_string(rhs));
    }
    void note(std::string s) { rec_.diagnostics.push_back(std::move(s)); }
    CheckRecord& record() { return rec_; }

    CheckRecord done(const std::string& empty_reason = "no admissible instance") {
        if (rec_.instances == 0) return skipped(std::move(rec_), empty_reason);
        return std::move(rec_);
    }

private:
    CheckRecord rec_;
};

std::vector<Rational> fracs(int den) {
    std::vector<Rational> v;
    for (int i = 1; i < den; ++i) v.emplace_back(i, den);
    return v;
}

template <class... Vs>
std::vector<Rational> concat(Vs&&... vs) {
    std::vector<Rational> out;
    (out.insert(out.end(), vs.begin(), vs.end()), ...);
    return out;
}

bool admissible(const Env& e, int d, int k) {
    const std::int64_t p = e.p();
    return d % p && k % p && (d - k) % p;
}

std::vector<std::uint32_t> sample_codes(const Env& e, const SuiteConfig& cfg, bool with_zero) {
    std::vector<std::uint32_t> out;
    if (with_zero) out.push_back(0);
    if (e.q() <= cfg.sample_above) {
        for (std::uint32_t c = 1; c < e.q(); ++c) out.push_back(c);
    } else {
        const std::uint64_t m = e.n();
        for (int i = 0; i < cfg.samples; ++i) out.push_back(static_cast<std::uint32_t>(1 + (i * m) / cfg.samples));
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return out;
}

std::string x_at(const Env& e, std::uint32_t code, const char* name = "x") {
    return std::string(name) + "=" + e.el(code).str();
}

// Gamma_p values mod p^M.
struct Gam {
    std::shared_ptr<const GammaTable> table;
    u64 pm;
    Gam(std::uint32_t p, int M) : table(gamma_table(p, M)), pm(checked_pow(p, M)) {}
    u64 operator()(const Rational& x) const { return table->at(x) % pm; }
};

// ---------------------------------------------------------------- diagonal hypersurface

CheckRecord diagonal_counts(const Env& e, int d, int k) {
    CheckRecord rec = make_record("diagonal-counts", e, {{"d", d}, {"k", k}});
    if (gcd_i64(d, k) != 1) return skipped(rec, "gcd(d,k) > 1");
    if (!admissible(e, d, k)) return skipped(rec, "p divides dk(d-k)");
    Tally t(std::move(rec));
    for (std::uint32_t c = 1; c < e.q(); ++c) {
        DiagonalSurfaceParams dp{d, k, e.el(c)};
        const auto D = count_projective_D(dp);
        const int rq = r_q(dp), rqp = r_q_prime(dp);
        t.add(D == rq && rq == rqp, x_at(e, c, "lambda"), "#D=" + std::to_string(D),
              "r_q=" + std::to_string(rq) + ",r_q'=" + std::to_string(rqp));
    }
    return t.done();
}

CheckRecord affine_projective(const Env& e, int d, int k) {
    Tally t(make_record("affine-projective", e, {{"d", d}, {"k", k}}));
    for (std::uint32_t c = 1; c < e.q(); ++c) {
        DiagonalSurfaceParams dp{d, k, e.el(c)};
        t.add(count_affine_N(dp), static_cast<std::int64_t>(e.n()) * count_projective_D(dp) + 1, x_at(e, c, "lambda"));
    }
    return t.done();
}

GParams diagonal_params(int d, int k) {
    return GParams{fracs(d), concat(std::vector<Rational>{Rational(0)}, fracs(k), fracs(d - k))};
}

CheckRecord diagonal_gn(const Env& e, int d, int k) {
    CheckRecord rec = make_record("diagonal-gn", e, {{"d", d}, {"k", k}});
    if (!admissible(e, d, k)) return skipped(rec, "p divides dk(d-k)");
    rec.branch = gcd_i64(d, k) == 1 ? "coprime" : "non-coprime";
    Tally t(std::move(rec));
    const FieldCtx& f = *e.f;
    GnEvaluator G(*e.ctx, diagonal_params(d, k), e.M);
    const std::int64_t n = e.n();
    const std::int64_t k1 = gcd_i64(n, k);
    std::int64_t shortcut = gcd_i64(k1, d) - 1;
    FqElem scale = f.from_int(k).pow(k) * f.from_int(d - k).pow(d - k);
    const PR corr_factor = -e.rat(1 - static_cast<std::int64_t>(e.q()), e.q());
    for (std::uint32_t c = 1; c < e.q(); ++c) {
        const FqElem lam = e.el(c);
        DiagonalSurfaceParams dp{d, k, lam};
        const int rq = r_q(dp);
        // sum over chi != eps with chi^{k1} = eps of conj(chi)^d(-lambda d) delta(chi^d)
        const FqElem arg = -(lam * f.from_int(d));
        ZqElem s = e.zq().zero();
        std::int64_t terms = 0;
        for (std::int64_t a = 1; a < n; ++a) {
            if ((a * k1) % n != 0 || (a * d) % n != 0) continue;
            s += e.ctx->eval(static_cast<std::uint32_t>(reduce_signed(-a * d, n)), arg.code());
            ++terms;
        }
        if (terms != shortcut) t.note("correction term count " + std::to_string(terms) + " != gcd(k1,d)-1");
        PR value = e.num(1) + G(scale * lam.pow(d)) + corr_factor * PR(s, 0, e.zq().precision());
        auto recovered = value.to_integer(0, d);
        bool ok = recovered && *recovered == rq && agree(value, e.num(rq), e.M);
        t.add(ok, x_at(e, c, "lambda"), value.str() + (recovered ? " -> " + std::to_string(*recovered) : " (no integer)"),
              std::to_string(rq), val_of(value), std::nullopt);
        if (terms != shortcut) t.record().status = Status::fail;
    }
    return t.done();
}

// ---------------------------------------------------------------- summation identities

CheckRecord odd_summation(const Env& e, const SuiteConfig& cfg, int d, int k) {
    CheckRecord rec = make_record("odd-summation", e, {{"d", d}, {"k", k}});
    if (!admissible(e, d, k)) return skipped(rec, "p divides dk(d-k)");
    Tally t(std::move(rec));
    const FieldCtx& f = *e.f;
    std::vector<Rational> dk_block;
    for (int i = 1; i < d - k; ++i)
        if (2 * i != d - k) dk_block.emplace_back(i, d - k);
    GnEvaluator full(*e.ctx, diagonal_params(d, k), e.M);
    GnEvaluator shifted(*e.ctx, GParams{fracs(d), concat(std::vector<Rational>{Rational(0)}, fracs(k), dk_block,
                                                            std::vector<Rational>{Rational(0)})},
                        e.M);
    std::vector<int> w(e.q());
    for (std::uint32_t c = 0; c < e.q(); ++c) w[c] = legendre(e.el(c) * (e.el(c) - f.one()));
    const PR q = e.num(e.q());
    for (std::uint32_t x : sample_codes(e, cfg, false)) {
        PR lhs = e.num(1) + q * full.at_code(x);
        PR rhs = e.num(0);
        for (std::uint32_t c = 0; c < e.q(); ++c) {
            if (!w[c]) continue;
            PR g = shifted.at_code(f.mul_code(x, c));
            rhs = w[c] > 0 ? rhs - g : rhs + g;
        }
        t.add(lhs, rhs, e.M, x_at(e, x));
    }
    return t.done();
}

CheckRecord even_summation(const Env& e, const SuiteConfig& cfg, int d, int k) {
    CheckRecord rec = make_record("even-summation", e, {{"d", d}, {"k", k}});
    if (!admissible(e, d, k)) return skipped(rec, "p divides dk(d-k)");
    Tally t(std::move(rec));
    const FieldCtx& f = *e.f;
    std::vector<Rational> top;
    for (int i = 1; i < d; ++i)
        if (2 * i != d) top.emplace_back(i, d);
    GnEvaluator small(*e.ctx, GParams{top, concat(fracs(k), fracs(d - k))}, e.M);
    GnEvaluator full(*e.ctx, diagonal_params(d, k), e.M);
    std::vector<int> w(e.q());
    for (std::uint32_t c = 0; c < e.q(); ++c) w[c] = legendre(f.one() - e.el(c));
    for (std::uint32_t x : sample_codes(e, cfg, true)) {
        PR lhs = e.num(0);
        for (std::uint32_t c = 0; c < e.q(); ++c) {
            if (!w[c]) continue;
            PR g = small.at_code(f.mul_code(x, c));
            lhs = w[c] > 0 ? lhs + g : lhs - g;
        }
        t.add(lhs, -full.at_code(x), e.M, x_at(e, x));
    }
    return t.done();
}

// ---------------------------------------------------------------- elliptic and Hessian curves

bool q_is_1_mod_3(const Env& e) { return e.q() % 3 == 1; }

Records weierstrass_trace_sum(const Env& e) {
    if (e.p() <= 3) return {skipped(make_record("weierstrass-trace-sum", e), "requires p > 3")};
    if (q_is_1_mod_3(e)) return {skipped(make_record("weierstrass-trace-sum", e), "requires q != 1 mod 3")};
    const FieldCtx& f = *e.f;
    GnEvaluator G(*e.ctx, GParams{{Rational(1, 4), Rational(1, 2), Rational(3, 4)}, {Rational(0), Rational(1, 3), Rational(2, 3)}}, e.M);
    Records out;
    for (std::uint32_t bc = 1; bc < e.q(); ++bc) {
        const FqElem b = e.el(bc);
        CheckRecord rec = make_record("weierstrass-trace-sum", e, {{"b", bc}});
        rec.params.back().second = b.str();
        std::int64_t lhs = 0;
        for (std::uint32_t tc = 1; tc < e.q(); ++tc) {
            const FqElem t = e.el(tc);
            const int w = legendre(t * (t.pow(3) - f.one()));
            WeierstrassCurve E{f.zero(), t, b};
            if (w && E.is_singular()) rec.diagnostics.push_back("singular t=" + t.str() + " counted as-is");
            if (w) lhs += w * ec_count(E, true).a_q;
        }
        const FqElem arg = f.from_int(-27) * b * b / f.from_int(4);
        PR rhs = e.num(-static_cast<std::int64_t>(e.q()) * legendre(b)) * G(arg);
        PR l = e.num(lhs);
        rec.lhs = std::to_string(lhs);
        rec.rhs = rhs.str();
        rec.rhs_valuation = val_of(rhs);
        rec.instances = 1;
        rec.status = agree(l, rhs, e.M) ? Status::pass : Status::fail;
        out.push_back(std::move(rec));
    }
    return out;
}

Records legendre_trace_sum(const Env& e) {
    const FieldCtx& f = *e.f;
    Records out;
    for (std::uint32_t fc = 1; fc < e.q(); ++fc) {
        const FqElem fe = e.el(fc);
        CheckRecord rec = make_record("legendre-trace-sum", e, {{"f", fc}});
        rec.params.back().second = fe.str();
        std::int64_t lhs = 0;
        for (std::uint32_t tc = 1; tc < e.q(); ++tc) {
            const FqElem t = e.el(tc);
            const int w = legendre(t * (t - f.one()));
            if (!w) continue;
            WeierstrassCurve E{fe, t.inverse(), f.zero()};
            if (E.is_singular()) rec.diagnostics.push_back("singular t=" + t.str() + " counted as-is");
            lhs += w * ec_count(E, true).a_q;
        }
        const std::int64_t q = e.q();
        const FqElem disc = fe * fe - f.from_int(4);
        std::int64_t rhs = -legendre(fe);
        if (disc.is_zero()) {
            rec.branch = "f^2=4";
            rhs -= q * legendre(f.from_int(2) * fe);
        } else if (legendre(disc) < 0) {
            rec.branch = "f^2-4 non-square";
        } else {
            rec.branch = "f^2-4 square";
            FqElem a;
            for (const auto& y : f.elements())
                if (y * y == disc) {
                    a = y;
                    break;
                }
            const FqElem u = a / fe;
            rhs -= q * legendre(f.from_int(2) * fe) * (legendre(f.one() + u) + legendre(f.one() - u));
        }
        rec.lhs = std::to_string(lhs);
        rec.rhs = std::to_string(rhs);
        rec.instances = 1;
        rec.precision = 0;
        rec.status = lhs == rhs ? Status::pass : Status::fail;
        out.push_back(std::move(rec));
    }
    return out;
}

CheckRecord hessian_sum(const Env& e) {
    CheckRecord rec = make_record("hessian-sum", e);
    rec.precision = 0;
    if (e.p() <= 3) return skipped(rec, "requires p > 3");
    if (q_is_1_mod_3(e)) return skipped(rec, "requires q != 1 mod 3");
    const FieldCtx& f = *e.f;
    std::int64_t affine = 0, projective = 0;
    for (std::uint32_t tc = 2; tc < e.q(); ++tc) {
        const FqElem t = e.el(tc);
        if (t.pow(3).is_one()) continue;
        const int w = legendre(t * (t.pow(3) - f.one()));
        if (!w) continue;
        affine += w * hessian_count(t);
        projective += w * hessian_count_projective(t);
    }
    rec.lhs = std::to_string(affine);
    rec.rhs = "1";
    rec.instances = 1;
    rec.diagnostics.push_back("projective sum " + std::to_string(projective));
    rec.status = affine == 1 ? Status::pass : Status::fail;
    return rec;
}

// ---------------------------------------------------------------- Gauss and Jacobi sums

CheckRecord theta_expansion(const Env& e) {
    Tally t(make_record("theta-expansion", e));
    for (std::uint32_t c = 1; c < e.q(); ++c) t.add(theta_expansion_check(*e.ctx, e.el(c)), x_at(e, c, "alpha"), "theta", "expansion");
    return t.done();
}

CheckRecord gauss_norm(const Env& e) {
    Tally t(make_record("gauss-norm", e));
    const auto& eis = e.ctx->eis();
    const std::int64_t q = e.q();
    for (std::uint32_t a = 0; a < e.n(); ++a) {
        CharIndex chi = e.ctx->chi(a);
        EisElem lhs = e.ctx->gauss_sum_direct(chi) * e.ctx->gauss_sum_direct(chi.inverse());
        EisElem rhs = eis.from_zq(e.zq().from_int(q * chi.at_minus_one() - (q - 1) * delta(chi)));
        t.add(lhs.congruent(rhs, e.M), chi.str(), lhs.str(e.M), rhs.str(e.M));
    }
    return t.done();
}

CheckRecord jacobi_gauss(const Env& e, const SuiteConfig& cfg) {
    CheckRecord rec = make_record("jacobi-gauss", e);
    if (e.q() > cfg.pair_qmax) return skipped(rec, "pair sweep limited to q <= " + std::to_string(cfg.pair_qmax));
    Tally t(std::move(rec));
    const auto& eis = e.ctx->eis();
    const std::int64_t q = e.q();
    for (std::uint32_t a = 0; a < e.n(); ++a)
        for (std::uint32_t b = 0; b < e.n(); ++b) {
            CharIndex A = e.ctx->chi(a), B = e.ctx->chi(b), AB = A * B;
            const EisElem& gab = e.ctx->gauss_sum_direct(AB);
            // J(A,B) g(AB) = g(A) g(B) + (q-1) B(-1) delta(AB) g(AB)
            EisElem lhs = gab * jacobi_sum(*e.ctx, A, B);
            EisElem rhs = e.ctx->gauss_sum_direct(A) * e.ctx->gauss_sum_direct(B);
            if (AB.is_trivial()) rhs += gab * e.zq().from_int((q - 1) * B.at_minus_one());
            t.add(lhs.congruent(rhs, e.M), A.str() + "," + B.str(), lhs.str(e.M), rhs.str(e.M));
        }
    (void)eis;
    return t.done();
}

CheckRecord jacobi_reflection(const Env& e, const SuiteConfig& cfg) {
    CheckRecord rec = make_record("jacobi-reflection", e);
    if (e.q() > cfg.pair_qmax) return skipped(rec, "pair sweep limited to q <= " + std::to_string(cfg.pair_qmax));
    Tally t(std::move(rec));
    for (std::uint32_t a = 0; a < e.n(); ++a)
        for (std::uint32_t b = 0; b < e.n(); ++b) {
            CharIndex A = e.ctx->chi(a), B = e.ctx->chi(b);
            ZqElem lhs = jacobi_sum(*e.ctx, A, B);
            ZqElem rhs = jacobi_sum(*e.ctx, A, (A * B).inverse());
            if (A.at_minus_one() < 0) rhs = -rhs;
            t.add(lhs == rhs, A.str() + "," + B.str(), lhs.str(e.M), rhs.str(e.M));
        }
    return t.done();
}

CheckRecord binomial_trivial(const Env& e) {
    Tally t(make_record("binomial-trivial", e));
    const std::int64_t q = e.q();
    for (std::uint32_t a = 0; a < e.n(); ++a) {
        CharIndex A = e.ctx->chi(a);
        PR expected = e.rat(-1, q) + e.rat(q - 1, q) * e.num(delta(A));
        PR b1 = binomial(*e.ctx, A, e.ctx->trivial());
        PR b2 = binomial(*e.ctx, A, A);
        t.add(agree(b1, expected, e.M) && agree(b2, expected, e.M), A.str(), b1.str() + " ; " + b2.str(), expected.str(),
              val_of(b1), val_of(expected));
    }
    return t.done();
}

CheckRecord orthogonality(const Env& e) {
    Tally t(make_record("orthogonality", e));
    for (std::uint32_t c = 0; c < e.q(); ++c) {
        ZqElem s = orthogonality_check(*e.ctx, e.el(c));
        ZqElem expected = e.zq().from_int(c == 1 ? e.n() : 0);
        t.add(s == expected, x_at(e, c), s.str(e.M), expected.str(e.M));
    }
    return t.done();
}

CheckRecord gross_koblitz(const Env& e, const SuiteConfig& cfg) {
    CheckRecord rec = make_record("gross-koblitz", e);
    if (e.p() > cfg.gk_pmax) return skipped(rec, "Eisenstein sweep limited to p <= " + std::to_string(cfg.gk_pmax));
    const int M = std::max(6, e.M);
    if (M > max_storage_precision(e.p())) return skipped(rec, "precision exceeds storage");
    auto ctx = CharacterCtx::make(e.f, M);
    rec.precision = M;
    Tally t(std::move(rec));
    for (std::uint32_t a = 1; a + 1 < e.q(); ++a) {
        // g(conj(omega)^a) = -pi^s prod Gamma_p(<a p^i/(q-1)>)
        CharIndex chi = ctx->chi(-static_cast<std::int64_t>(a));
        const std::uint32_t p = e.p();
        Gam gam(p, M);
        u64 unit = 1;
        Rational s(0);
        u64 ap = a;
        for (int i = 0; i < e.r(); ++i) {
            Rational fr = Rational(static_cast<std::int64_t>(ap), e.n()).frac();
            unit = mulmod(unit, gam(fr), gam.pm);
            s = s + fr;
            ap = ap * p;
        }
        const std::int64_t sp = (s * Rational(p - 1)).floor();
        const auto& eis = ctx->eis();
        EisElem rhs = -(eis.from_zq(ctx->zq().from_int(static_cast<std::int64_t>(unit))).times_pi_power(sp));
        const EisElem& lhs = ctx->gauss_sum_direct(chi);
        t.add(lhs.congruent(rhs, M), "a=" + std::to_string(a), lhs.str(M), rhs.str(M));
    }
    return t.done();
}

// ---------------------------------------------------------------- Gamma_p product formulas

CheckRecord gamma_mult(const Env& e, int tt, bool minus) {
    CheckRecord rec = make_record(minus ? "gamma-mult-minus" : "gamma-mult-plus", e, {{"t", tt}});
    if (tt % static_cast<int>(e.p()) == 0) return skipped(rec, "p divides t");
    Tally t(std::move(rec));
    Gam gam(e.p(), e.M);
    const std::int64_t n = e.n();
    const FqElem tf = e.f->from_int(tt);
    for (std::int64_t a = 0; a < n; ++a) {
        u64 lhs = 1, rhs = 1;
        std::int64_t pi = 1;
        for (int i = 0; i < e.r(); ++i, pi *= e.p()) {
            const Rational x(pi * a, n);
            lhs = mulmod(lhs, gam(((minus ? -x : x) * Rational(tt)).frac()), gam.pm);
            for (int h = 1; h < tt; ++h) lhs = mulmod(lhs, gam(Rational(h * pi, tt).frac()), gam.pm);
            for (int h = 0; h < tt; ++h) {
                Rational y = minus ? Rational(pi * (1 + h), tt) - x : Rational(pi * h, tt) + x;
                rhs = mulmod(rhs, gam(y.frac()), gam.pm);
            }
        }
        // omega(t^{-ta}) or omega(t^{ta})
        const FqElem w = tf.pow(minus ? -tt * a : tt * a);
        ZqElem l = teichmuller(w, e.zq()).scaled(lhs);
        ZqElem r = e.zq().from_int(static_cast<std::int64_t>(rhs));
        t.add(l.congruent(r, e.M), "a=" + std::to_string(a), l.str(e.M), r.str(e.M));
    }
    return t.done();
}

Records gamma_reflection(const Env& e) {
    Gam gam(e.p(), e.M);
    const std::int64_t n = e.n();
    const int sign_r = e.r() % 2 ? -1 : 1;
    Tally comp(make_record("gamma-reflection", e));
    comp.record().branch = "complement";
    Tally half(make_record("gamma-reflection", e));
    half.record().branch = "half-shift";
    half.record().key.push_back(1);
    u64 half_sq = 1;
    for (int i = 0; i < e.r(); ++i) half_sq = mulmod(half_sq, mulmod(gam(Rational(1, 2)), gam(Rational(1, 2)), gam.pm), gam.pm);
    const u64 inv_half_sq = invmod(half_sq, gam.pm);
    for (std::int64_t a = 0; a < n; ++a) {
        u64 c = 1, h = inv_half_sq;
        std::int64_t pi = 1;
        for (int i = 0; i < e.r(); ++i, pi *= e.p()) {
            const Rational x(pi * a, n);
            c = mulmod(c, mulmod(gam((Rational(pi) - x).frac()), gam(x.frac()), gam.pm), gam.pm);
            h = mulmod(h, mulmod(gam((Rational(pi, 2) - x).frac()), gam((Rational(pi, 2) + x).frac()), gam.pm), gam.pm);
        }
        const std::int64_t bar = a % 2 ? -1 : 1;  // conj(omega)^a(-1)
        const std::string where = "a=" + std::to_string(a);
        if (a > 0) comp.add(PadicInt(e.p(), e.M, static_cast<std::int64_t>(c)) == PadicInt(e.p(), e.M, sign_r * bar), where,
                            std::to_string(c), std::to_string(sign_r * bar));
        if (2 * a != n) half.add(PadicInt(e.p(), e.M, static_cast<std::int64_t>(h)) == PadicInt(e.p(), e.M, bar), where,
                                 std::to_string(h), std::to_string(bar));
    }
    return {comp.done(), half.done()};
}

CheckRecord gamma_half_square(const Env& e) {
    Gam gam(e.p(), e.M);
    Tally t(make_record("gamma-half-square", e));
    u64 v = 1;
    for (int i = 0; i < e.r(); ++i) v = mulmod(v, mulmod(gam(Rational(1, 2)), gam(Rational(1, 2)), gam.pm), gam.pm);
    const std::int64_t expected = (e.r() % 2 ? -1 : 1) * legendre(-e.f->one());
    PadicInt lhs(e.p(), e.M, static_cast<std::int64_t>(v)), rhs(e.p(), e.M, expected);
    t.add(lhs == rhs, "-", lhs.str(), rhs.str());
    return t.done();
}

CheckRecord floor_d(const Env& e, int d) {
    CheckRecord rec = make_record("floor-d", e, {{"d", d}});
    rec.precision = 0;
    if (d % static_cast<int>(e.p()) == 0) return skipped(rec, "p divides d");
    Tally t(std::move(rec));
    const std::int64_t n = e.n();
    for (std::int64_t a = 1; a + 1 <= n - 1 + 0 && a <= n - 1; ++a) {
        std::int64_t pi = 1;
        for (int i = 0; i < e.r(); ++i, pi *= e.p()) {
            const Rational x(a * pi, n);
            std::int64_t lhs = x.floor() + (-x * Rational(d)).floor();
            std::int64_t rhs = -1;
            for (int h = 1; h < d; ++h) rhs += (Rational(h * pi, d).frac() - x).floor();
            t.add(lhs, rhs, "a=" + std::to_string(a) + ",i=" + std::to_string(i));
        }
    }
    return t.done();
}

CheckRecord floor_l(const Env& e, int l) {
    CheckRecord rec = make_record("floor-l", e, {{"l", l}});
    rec.precision = 0;
    if (l % static_cast<int>(e.p()) == 0) return skipped(rec, "p divides l");
    Tally t(std::move(rec));
    const std::int64_t n = e.n();
    for (std::int64_t a = 0; a < n; ++a) {
        std::int64_t pi = 1;
        for (int i = 0; i < e.r(); ++i, pi *= e.p()) {
            const Rational x(a * pi, n);
            std::int64_t lhs = (x * Rational(l)).floor();
            std::int64_t rhs = 0;
            for (int h = 0; h < l; ++h) rhs += (Rational(-h * pi, l).frac() + x).floor();
            t.add(lhs, rhs, "a=" + std::to_string(a) + ",i=" + std::to_string(i));
        }
    }
    return t.done();
}

// Both sides carry (-p)-powers; they are collected on the right, where the
// combined exponent lies in [-r, 0].
CheckRecord gamma_phi_sum(const Env& e, bool bar) {
    Tally t(make_record(bar ? "gamma-phi-sum-bar" : "gamma-phi-sum", e));
    Gam gam(e.p(), e.M);
    const FieldCtx& f = *e.f;
    const std::int64_t n = e.n();
    std::vector<int> w(e.q());
    for (std::uint32_t c = 0; c < e.q(); ++c) w[c] = legendre(e.el(c) * (e.el(c) - f.one()));
    const u64 inv_half = invmod(gam(Rational(1, 2)), gam.pm);
    for (std::int64_t a = 0; a < n; ++a) {
        u64 g = 1;
        std::int64_t E = 0;
        std::int64_t pi = 1;
        for (int i = 0; i < e.r(); ++i, pi *= e.p()) {
            const Rational x(a * pi, n);
            const Rational half(pi, 2);
            if (bar) {
                g = mulmod(g, mulmod(gam((Rational(pi) - x).frac()), gam((half + x).frac()), gam.pm), gam.pm);
                E += (Rational(1, 2) + x).floor() + (-x).floor();
            } else {
                g = mulmod(g, mulmod(gam(x.frac()), gam((half - x).frac()), gam.pm), gam.pm);
                E += (Rational(1, 2) - x).floor() + x.floor();
            }
            g = mulmod(g, inv_half, gam.pm);
        }
        ZqElem s = e.zq().zero();
        const std::uint32_t ea = static_cast<std::uint32_t>(reduce_signed(bar ? -a : a, n));
        for (std::uint32_t c = 1; c < e.q(); ++c) {
            if (!w[c]) continue;
            const ZqElem& v = e.ctx->eval(ea, f.neg_code(c));
            s = w[c] > 0 ? s + v : s - v;
        }
        // -(-p)^E s
        ZqElem u = (E % 2 == 0) ? -s : s;
        PR lhs(e.zq().from_int(static_cast<std::int64_t>(g)), 0, e.M);
        PR rhs(u, E, E + e.zq().precision());
        t.add(lhs, rhs, e.M, "a=" + std::to_string(a));
    }
    return t.done();
}

// ---------------------------------------------------------------- 2G2 / 3G3 identities

GParams gp(std::vector<Rational> top, std::vector<Rational> bottom) { return GParams{std::move(top), std::move(bottom)}; }
const Rational R0(0), R14(1, 4), R12(1, 2), R34(3, 4), R13(1, 3), R23(2, 3), R16(1, 6), R56(5, 6);

CheckRecord g3_to_g2(const Env& e) {
    Tally t(make_record("g3-to-g2", e));
    GnEvaluator g3(*e.ctx, gp({R14, R12, R34}, {R0, R12, R12}), e.M);
    GnEvaluator g2(*e.ctx, gp({R14, R34}, {R0, R12}), e.M);
    const PR inv_q = e.rat(1, e.q());
    for (std::uint32_t c = 0; c < e.q(); ++c)
        t.add(g3.at_code(c), g2.at_code(c) + e.num(legendre(e.el(c))) * inv_q, e.M, x_at(e, c));
    return t.done();
}

Records g2_transform(const Env& e) {
    const FieldCtx& f = *e.f;
    GnEvaluator a(*e.ctx, gp({R14, R34}, {R12, R12}), e.M);
    GnEvaluator inv(*e.ctx, gp({R12, R12}, {R14, R34}), e.M);
    GnEvaluator twist(*e.ctx, gp({R14, R34}, {R0, R0}), e.M);
    const PR inv_q = e.rat(1, e.q());
    Tally t1(make_record("g2-transform", e, {{"which", 1}}));
    t1.record().branch = "inversion";
    Tally t2(make_record("g2-transform", e, {{"which", 2}}));
    t2.record().branch = "twist";
    Tally t3(make_record("g2-transform", e, {{"which", 3}}));
    t3.record().branch = "cubic";
    for (std::uint32_t c = 0; c < e.q(); ++c) {
        const FqElem tt = e.el(c);
        // the 1/q factor costs r digits
        t2.add(a.at_code(c), e.num(legendre(-tt)) * inv_q * twist.at_code(c), e.M - e.r(), x_at(e, c, "t"));
        if (c) t1.add(a.at_code(c), inv(tt.inverse()), e.M, x_at(e, c, "t"));
    }
    Records out{t1.done(), t2.done()};
    if (e.p() <= 3) {
        out.push_back(skipped(t3.record(), "requires p > 3"));
        return out;
    }
    GnEvaluator cub(*e.ctx, gp({R13, R23}, {R0, R0}), e.M);
    GnEvaluator six(*e.ctx, gp({R12, R12}, {R16, R56}), e.M);
    const PR q = e.num(e.q());
    for (std::uint32_t c = 1; c < e.q(); ++c) {
        const FqElem tt = e.el(c);
        t3.add(cub.at_code(c), e.num(legendre(-(f.from_int(3) * tt))) * q * six(tt.inverse()), e.M, x_at(e, c, "t"));
    }
    out.push_back(t3.done());
    return out;
}

Records g2_phi_sum(const Env& e) {
    const FieldCtx& f = *e.f;
    GnEvaluator G(*e.ctx, gp({R14, R34}, {R12, R12}), e.M);
    std::vector<int> w(e.q());
    for (std::uint32_t c = 0; c < e.q(); ++c) w[c] = legendre(f.one() - e.el(c));
    const PR inv_q = e.rat(1, e.q());
    const int phi2 = legendre(f.from_int(2));
    Tally b1(make_record("g2-phi-sum", e, {{"branch", 1}}));
    b1.record().branch = "x=1";
    Tally b2(make_record("g2-phi-sum", e, {{"branch", 2}}));
    b2.record().branch = "(x-1)/x square";
    Tally b3(make_record("g2-phi-sum", e, {{"branch", 3}}));
    b3.record().branch = "(x-1)/x non-square";
    for (std::uint32_t x = 1; x < e.q(); ++x) {
        PR s = e.num(0);
        for (std::uint32_t c = 0; c < e.q(); ++c) {
            if (!w[c]) continue;
            PR g = G.at_code(f.mul_code(x, c));
            s = w[c] > 0 ? s + g : s - g;
        }
        const FqElem xe = e.el(x);
        const PR phix = e.num(legendre(xe)) * inv_q;
        if (x == 1) {
            b1.add(s, -inv_q - e.num(phi2), e.M, x_at(e, x));
            continue;
        }
        const FqElem v = (xe - f.one()) / xe;
        if (legendre(v) > 0) {
            FqElem a;
            for (const auto& y : f.elements())
                if (y * y == v) {
                    a = y;
                    break;
                }
            const std::int64_t sum = legendre(f.one() + a) + legendre(f.one() - a);
            b2.add(s, -phix - e.num(phi2 * sum), e.M, x_at(e, x));
        } else {
            b3.add(s, -phix, e.M, x_at(e, x));
        }
    }
    return {b1.done(), b2.done(), b3.done()};
}

Records g2_cubic_sum(const Env& e) {
    Tally b1(make_record("g2-cubic-sum", e, {{"branch", 1}}));
    b1.record().branch = "unit";
    Tally b2(make_record("g2-cubic-sum", e, {{"branch", 2}}));
    b2.record().branch = "shifted";
    if (e.p() <= 3) return {skipped(b1.record(), "requires p > 3"), skipped(b2.record(), "requires p > 3")};
    const FieldCtx& f = *e.f;
    GnEvaluator G(*e.ctx, gp({R13, R23}, {R0, R0}), e.M);
    std::vector<int> w(e.q());
    for (std::uint32_t c = 0; c < e.q(); ++c) w[c] = legendre(e.el(c) * (e.el(c) - f.one()));
    auto sum_at = [&](const FqElem& xinv) {
        PR s = e.num(0);
        for (std::uint32_t c = 0; c < e.q(); ++c) {
            if (!w[c]) continue;
            PR g = G.at_code(f.mul_code(c, xinv.code()));
            s = w[c] > 0 ? s + g : s - g;
        }
        return s;
    };
    b1.add(sum_at(f.one()), e.num(-1 - static_cast<std::int64_t>(e.q())), e.M, "x=1");
    for (std::uint32_t x = 2; x < e.q(); ++x) {
        const FqElem xe = e.el(x);
        if (legendre(f.from_int(3) * xe * (f.one() - xe)) != -1) continue;
        b2.add(sum_at(xe.inverse()), e.num(-1), e.M, x_at(e, x));
    }
    return {b1.done(), b2.done("no x with phi(3x(1-x)) = -1")};
}

Records greene_cubic_sum(const Env& e) {
    Tally b1(make_record("greene-cubic-sum", e, {{"branch", 1}}));
    b1.record().branch = "unit";
    Tally b2(make_record("greene-cubic-sum", e, {{"branch", 2}}));
    b2.record().branch = "shifted";
    Tally b3(make_record("greene-cubic-sum", e, {{"branch", 3}}));
    b3.record().branch = "bridge";
    auto skip_all = [&](const std::string& why) {
        return Records{skipped(b1.record(), why), skipped(b2.record(), why), skipped(b3.record(), why)};
    };
    if (e.p() <= 3) return skip_all("requires p > 3");
    if (!q_is_1_mod_3(e)) return skip_all("requires q = 1 mod 3");
    const FieldCtx& f = *e.f;
    const CharIndex chi3 = e.ctx->chi(e.n() / 3);
    FParams fp{{chi3, chi3.inverse()}, {e.ctx->trivial()}};
    GreeneF F(*e.ctx, fp);
    McCarthyFStar Fs(*e.ctx, fp);
    GnEvaluator G(*e.ctx, gp({R13, R23}, {R0, R0}), e.M);
    std::vector<int> w(e.q());
    for (std::uint32_t c = 0; c < e.q(); ++c) w[c] = legendre(e.el(c) * (e.el(c) - f.one()));
    auto sum_at = [&](const FqElem& x) {
        PR s = e.num(0);
        for (std::uint32_t c = 1; c < e.q(); ++c) {
            if (!w[c]) continue;
            PR v = F(x / e.el(c));
            s = w[c] > 0 ? s + v : s - v;
        }
        return s;
    };
    const PR inv_q = e.rat(1, e.q());
    b1.add(sum_at(f.one()), e.num(1) + inv_q, e.M, "x=1");
    for (std::uint32_t x = 2; x < e.q(); ++x) {
        const FqElem xe = e.el(x);
        if (legendre(f.from_int(3) * xe * (f.one() - xe)) != -1) continue;
        b2.add(sum_at(xe), inv_q, e.M, x_at(e, x));
    }
    const PR mq = e.num(-static_cast<std::int64_t>(e.q()));
    for (std::uint32_t u = 1; u < e.q(); ++u) b3.add(G.at_code(u), mq * F(e.el(u).inverse()), e.M, x_at(e, u, "t/x"));
    return {b1.done(), b2.done("no x with phi(3x(1-x)) = -1"), b3.done()};
}

// The intermediate links G = F* and F* = binomial(conj(chi3), eps)^{-1} F
// of the Greene route above, checked one by one.
Records fstar_bridge(const Env& e) {
    Tally b1(make_record("fstar-bridge", e, {{"link", 1}}));
    b1.record().branch = "G=F*";
    Tally b2(make_record("fstar-bridge", e, {{"link", 2}}));
    b2.record().branch = "F*=-qF";
    if (e.p() <= 3) return {skipped(b1.record(), "requires p > 3"), skipped(b2.record(), "requires p > 3")};
    if (!q_is_1_mod_3(e)) return {skipped(b1.record(), "requires q = 1 mod 3"), skipped(b2.record(), "requires q = 1 mod 3")};
    const CharIndex chi3 = e.ctx->chi(e.n() / 3);
    FParams fp{{chi3, chi3.inverse()}, {e.ctx->trivial()}};
    GreeneF F(*e.ctx, fp);
    McCarthyFStar Fs(*e.ctx, fp);
    GnEvaluator G(*e.ctx, gp({R13, R23}, {R0, R0}), e.M);
    const PR inv_binom = binomial(*e.ctx, chi3.inverse(), e.ctx->trivial()).inverse();
    for (std::uint32_t u = 1; u < e.q(); ++u) {
        const FqElem ui = e.el(u).inverse();
        const PR fs = Fs(ui);
        b1.add(G.at_code(u), fs, e.M, x_at(e, u, "t/x"));
        b2.add(fs, inv_binom * F(ui), e.M, x_at(e, u, "x/t"));
    }
    return {b1.done(), b2.done()};
}

Records g2_vanishing(const Env& e) {
    const FieldCtx& f = *e.f;
    GnEvaluator g3(*e.ctx, gp({R14, R12, R34}, {R0, R12, R12}), e.M);
    GnEvaluator g2(*e.ctx, gp({R14, R34}, {R0, R12}), e.M);
    Tally rel(make_record("g2-vanishing", e, {{"branch", 1}}));
    rel.record().branch = "root count";
    Tally van(make_record("g2-vanishing", e, {{"branch", 2}}));
    van.record().branch = "non-square";
    const std::int64_t q = e.q();
    for (std::uint32_t c = 1; c < e.q(); ++c) {
        const FqElem alpha = e.el(c);
        const FqElem arg = (f.from_int(16) * alpha).inverse();
        std::vector<FqElem> h{-alpha, f.zero(), f.one(), f.from_int(-2), f.one()};
        const int nq = count_distinct_roots(h, f);
        PR expected = e.num(nq - 1) + e.rat((1 - q) * legendre(alpha), q);
        rel.add(g3(arg), expected, e.M, x_at(e, c, "alpha"));
        if (legendre(alpha) < 0) van.add(g2(arg), e.num(0), e.M, x_at(e, c, "alpha"));
    }
    return {rel.done(), van.done()};
}

CheckRecord phi_sum(const Env& e) {
    CheckRecord rec = make_record("phi-sum", e);
    rec.precision = 0;
    const FieldCtx& f = *e.f;
    std::int64_t s = 0;
    for (const auto& t : f.elements()) s += legendre(t * (t - f.one()));
    rec.lhs = std::to_string(s);
    rec.rhs = "-1";
    rec.instances = 1;
    rec.status = s == -1 ? Status::pass : Status::fail;
    return rec;
}

CheckRecord char_sum_c(const Env& e, int d, int k) {
    CheckRecord rec = make_record("char-sum-c", e, {{"d", d}, {"k", k}});
    if (!admissible(e, d, k)) return skipped(rec, "p divides dk(d-k)");
    Tally t(std::move(rec));
    const FieldCtx& f = *e.f;
    const std::int64_t n = e.n();
    const std::int64_t k1 = gcd_i64(n, k);
    const std::int64_t q1 = n;
    for (std::uint32_t c = 1; c < e.q(); ++c) {
        const FqElem alpha = e.el(c);
        PR lhs = char_sum_C(*e.ctx, d, k, alpha);
        std::vector<FqElem> h(d + 1, f.zero());
        std::int64_t binom = 1;
        for (int j = 0; j <= k; ++j) {
            h[d - k + j] += f.from_int(j % 2 ? -binom : binom);
            binom = binom * (k - j) / (j + 1);
        }
        h[0] -= (d - k) % 2 ? -alpha : alpha;
        const int nq = count_distinct_roots(h, f);
        const FqElem sa = d % 2 ? -alpha : alpha;
        ZqElem s = e.zq().zero();
        for (std::int64_t a = 0; a < n; ++a)
            if ((a * k1) % n == 0) s += e.ctx->eval(static_cast<std::uint32_t>(a), sa.code());
        PR rhs = e.num(q1 * nq) - e.num(q1) * PR(s, 0, e.zq().precision());
        t.add(lhs, rhs, e.M, x_at(e, c, "alpha"));
    }
    return t.done();
}

CheckRecord complex_shadow(const Env& e, const SuiteConfig& cfg) {
    CheckRecord rec = make_record("complex-shadow", e);
    rec.precision = 0;
    if (e.q() > cfg.shadow_qmax) return skipped(rec, "limited to q <= " + std::to_string(cfg.shadow_qmax));
    double worst = 0;
    for (std::uint32_t a = 1; a < e.n(); ++a)
        worst = std::max(worst, std::abs(std::norm(complex_gauss_sum(*e.f, a)) - static_cast<double>(e.q())));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1e", worst);
    rec.lhs = std::string("max ||g|^2 - q| = ") + (worst < 1e-8 ? "< 1e-8" : buf);
    rec.rhs = "< 1e-8";
    rec.instances = e.n() - 1;
    rec.status = worst < 1e-8 ? Status::pass : Status::fail;
    return rec;
}

// ---------------------------------------------------------------- driver

using Task = std::function<Records()>;

std::vector<std::pair<std::uint32_t, int>> grid_fields(const SuiteConfig& cfg) {
    if (!cfg.fields.empty()) return cfg.fields;
    std::vector<std::pair<std::uint32_t, int>> out;
    for (int r = 1; r <= cfg.rmax; ++r)
        for (std::uint32_t p = 3; p <= cfg.pmax; p += 2) {
            if (!is_prime(p)) continue;
            u64 q = 1;
            for (int i = 0; i < r; ++i) q *= p;
            if (q <= (1u << 24)) out.emplace_back(p, r);
        }
    std::sort(out.begin(), out.end());
    return out;
}

void add_tasks(std::vector<Task>& tasks, const std::string& id, const Env& e, const SuiteConfig& cfg) {
    using Extra = std::vector<std::pair<std::string, std::int64_t>>;
    // A task that throws becomes a failing record carrying the exception text;
    // exceeding a table or storage limit becomes a skip.
    auto many = [&](std::function<Records()> fn, Extra extra = {}) {
        tasks.push_back([fn, id, e, extra]() -> Records {
            try {
                return fn();
            } catch (const std::length_error& ex) {
                return {skipped(make_record(id, e, extra), std::string("resource limit: ") + ex.what())};
            } catch (const std::exception& ex) {
                CheckRecord rec = make_record(id, e, extra);
                rec.status = Status::fail;
                rec.reason = ex.what();
                return {rec};
            }
        });
    };
    auto one = [&](std::function<CheckRecord()> fn, Extra extra = {}) {
        many([fn] { return Records{fn()}; }, std::move(extra));
    };
    const int dmax = cfg.dmax;
    auto pairs = [dmax](auto&& pred) {
        std::vector<std::pair<int, int>> v;
        for (int d = 2; d <= dmax; ++d)
            for (int k = 1; k < d; ++k)
                if (pred(d, k)) v.emplace_back(d, k);
        return v;
    };
    auto any = [](int, int) { return true; };
    if (id == "diagonal-counts")
        for (auto [d, k] : pairs(any)) one([=] { return diagonal_counts(e, d, k); }, {{"d", d}, {"k", k}});
    else if (id == "affine-projective")
        for (auto [d, k] : pairs(any)) one([=] { return affine_projective(e, d, k); }, {{"d", d}, {"k", k}});
    else if (id == "diagonal-gn")
        for (auto [d, k] : pairs(any)) one([=] { return diagonal_gn(e, d, k); }, {{"d", d}, {"k", k}});
    else if (id == "odd-summation")
        for (auto [d, k] : pairs([](int d, int k) { return d % 2 && k % 2; })) one([=, &cfg] { return odd_summation(e, cfg, d, k); }, {{"d", d}, {"k", k}});
    else if (id == "even-summation")
        for (auto [d, k] : pairs([](int d, int k) { return d % 2 == 0 && k >= 2; })) one([=, &cfg] { return even_summation(e, cfg, d, k); }, {{"d", d}, {"k", k}});
    else if (id == "char-sum-c")
        for (auto [d, k] : pairs(any)) one([=] { return char_sum_c(e, d, k); }, {{"d", d}, {"k", k}});
    else if (id == "weierstrass-trace-sum")
        many([=] { return weierstrass_trace_sum(e); });
    else if (id == "legendre-trace-sum")
        many([=] { return legendre_trace_sum(e); });
    else if (id == "hessian-sum")
        one([=] { return hessian_sum(e); });
    else if (id == "theta-expansion")
        one([=] { return theta_expansion(e); });
    else if (id == "gauss-norm")
        one([=] { return gauss_norm(e); });
    else if (id == "jacobi-gauss")
        one([=, &cfg] { return jacobi_gauss(e, cfg); });
    else if (id == "jacobi-reflection")
        one([=, &cfg] { return jacobi_reflection(e, cfg); });
    else if (id == "binomial-trivial")
        one([=] { return binomial_trivial(e); });
    else if (id == "orthogonality")
        one([=] { return orthogonality(e); });
    else if (id == "gross-koblitz")
        one([=, &cfg] { return gross_koblitz(e, cfg); });
    else if (id == "gamma-mult-minus" || id == "gamma-mult-plus")
        for (int t = 1; t <= 6; ++t) one([=] { return gamma_mult(e, t, id == "gamma-mult-minus"); }, {{"t", t}});
    else if (id == "gamma-reflection")
        many([=] { return gamma_reflection(e); });
    else if (id == "gamma-half-square")
        one([=] { return gamma_half_square(e); });
    else if (id == "floor-d")
        for (int d = 2; d <= 8; ++d) one([=] { return floor_d(e, d); }, {{"d", d}});
    else if (id == "floor-l")
        for (int l = 1; l <= 8; ++l) one([=] { return floor_l(e, l); }, {{"l", l}});
    else if (id == "gamma-phi-sum-bar" || id == "gamma-phi-sum")
        one([=] { return gamma_phi_sum(e, id == "gamma-phi-sum-bar"); });
    else if (id == "g3-to-g2")
        one([=] { return g3_to_g2(e); });
    else if (id == "g2-transform")
        many([=] { return g2_transform(e); });
    else if (id == "g2-phi-sum")
        many([=] { return g2_phi_sum(e); });
    else if (id == "g2-cubic-sum")
        many([=] { return g2_cubic_sum(e); });
    else if (id == "greene-cubic-sum")
        many([=] { return greene_cubic_sum(e); });
    else if (id == "fstar-bridge")
        many([=] { return fstar_bridge(e); });
    else if (id == "g2-vanishing")
        many([=] { return g2_vanishing(e); });
    else if (id == "phi-sum")
        one([=] { return phi_sum(e); });
    else if (id == "complex-shadow")
        one([=, &cfg] { return complex_shadow(e, cfg); });
    else
        throw std::logic_error("no tasks for check " + id);
}

}  // namespace

Report run_suite(const SuiteConfig& config) {
    const auto ids = resolve_suites(config.suites);
    Report report;
    report.config = config;

    std::vector<Env> envs;
    for (auto [p, r] : grid_fields(config)) {
        Env e;
        e.f = make_field(p, r);
        e.M = config.precision < 0 ? default_precision(p, r) : config.precision;
        e.ctx = CharacterCtx::make(e.f, e.M);
        envs.push_back(std::move(e));
    }

    std::vector<Task> tasks;
    for (const auto& id : ids)
        for (const auto& e : envs) add_tasks(tasks, id, e, config);

    std::vector<Records> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const auto start = std::chrono::steady_clock::now();
            results[i] = tasks[i]();
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (config.timing)
                for (auto& rec : results[i]) rec.seconds = secs / std::max<std::size_t>(1, results[i].size());
        }
    };
    const int nthreads = std::max(1, config.threads);
    std::vector<std::thread> pool;
    for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (auto& rs : results)
        for (auto& rec : rs) report.records.push_back(std::move(rec));
    std::stable_sort(report.records.begin(), report.records.end(), [](const CheckRecord& a, const CheckRecord& b) {
        if (a.id != b.id) return a.id < b.id;
        return a.key < b.key;
    });
    return report;
}

// ---------------------------------------------------------------- output

namespace {

nlohmann::ordered_json record_json(const CheckRecord& r, bool timing) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["status"] = to_string(r.status);
    j["branch"] = r.branch;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["lhs_valuation"] = r.lhs_valuation ? nlohmann::ordered_json(*r.lhs_valuation) : nlohmann::ordered_json(nullptr);
    j["rhs_valuation"] = r.rhs_valuation ? nlohmann::ordered_json(*r.rhs_valuation) : nlohmann::ordered_json(nullptr);
    j["precision"] = r.precision;
    j["instances"] = r.instances;
    j["reason"] = r.reason;
    j["diagnostics"] = r.diagnostics;
    if (timing) j["seconds"] = r.seconds;
    return j;
}

std::string params_str(const CheckRecord& r) {
    std::string s;
    for (const auto& [k, v] : r.params) {
        if (!s.empty()) s += ' ';
        s += k + "=" + v;
    }
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

std::string to_json(const Report& report, int indent) {
    const auto& c = report.config;
    nlohmann::ordered_json j;
    nlohmann::ordered_json cfg;
    cfg["suites"] = resolve_suites(c.suites);
    nlohmann::ordered_json fields = nlohmann::ordered_json::array();
    for (auto [p, r] : grid_fields(c)) fields.push_back({p, r});
    cfg["fields"] = fields;
    cfg["dmax"] = c.dmax;
    cfg["precision"] = c.precision;
    cfg["gk_pmax"] = c.gk_pmax;
    cfg["sample_above"] = c.sample_above;
    cfg["samples"] = c.samples;
    cfg["pair_qmax"] = c.pair_qmax;
    cfg["shadow_qmax"] = c.shadow_qmax;
    j["config"] = cfg;
    nlohmann::ordered_json summary;
    summary["pass"] = report.count(Status::pass);
    summary["fail"] = report.count(Status::fail);
    summary["skip"] = report.count(Status::skip);
    summary["branch_coverage"] = report.branch_coverage();
    j["summary"] = summary;
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const auto& r : report.records) recs.push_back(record_json(r, c.timing));
    j["records"] = recs;
    return j.dump(indent) + "\n";
}

std::string to_csv(const Report& report) {
    std::ostringstream os;
    os << "id,status,branch,params,lhs,rhs,lhs_valuation,rhs_valuation,precision,instances,reason,diagnostics";
    if (report.config.timing) os << ",seconds";
    os << '\n';
    for (const auto& r : report.records) {
        os << csv_field(r.id) << ',' << to_string(r.status) << ',' << csv_field(r.branch) << ',' << csv_field(params_str(r))
           << ',' << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ',' << opt_str(r.lhs_valuation) << ','
           << opt_str(r.rhs_valuation) << ',' << r.precision << ',' << r.instances << ',' << csv_field(r.reason) << ','
           << csv_field(join(r.diagnostics, " | "));
        if (report.config.timing) os << ',' << r.seconds;
        os << '\n';
    }
    return os.str();
}

std::string to_plain(const Report& report) {
    std::ostringstream os;
    for (const auto& r : report.records) {
        os << to_string(r.status) << ' ' << r.id << ' ' << params_str(r);
        if (!r.branch.empty()) os << " [" << r.branch << ']';
        if (r.status == Status::skip)
            os << " : " << r.reason;
        else
            os << " : " << r.lhs << " | " << r.rhs;
        os << '\n';
        if (r.status == Status::fail)
            for (const auto& d : r.diagnostics) os << "    " << d << '\n';
    }
    os << "pass " << report.count(Status::pass) << ", fail " << report.count(Status::fail) << ", skip "
       << report.count(Status::skip) << '\n';
    return os.str();
}

}  // namespace hypfq
