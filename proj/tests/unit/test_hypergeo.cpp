#include <algorithm>
#include <cmath>
#include <complex>

#include "doctest.h"
#include "hypfq/hypergeo.hpp"
#include "../oracle.hpp"

using namespace hypfq;

namespace {

std::vector<Rational> fracs(int den) {
    std::vector<Rational> v;
    for (int i = 1; i < den; ++i) v.emplace_back(i, den);
    return v;
}

GParams diagonal(int d, int k) {
    GParams g{fracs(d), {Rational(0)}};
    for (auto x : fracs(k)) g.bottom.push_back(x);
    for (auto x : fracs(d - k)) g.bottom.push_back(x);
    return g;
}

// Distinct y with y^{d-k} (1-y)^k = c, c = (d lambda)^{-d}.
int oracle_rq(const oracle::Field& f, int d, int k, oracle::i64 lambda) {
    const oracle::i64 c = f.inv(f.pow(f.mul(f.from_int(d), lambda), d));
    int n = 0;
    for (oracle::i64 y = 0; y < f.q; ++y) n += f.mul(f.pow(y, d - k), f.pow(f.add(1, f.neg(y)), k)) == c;
    return n;
}

}  // namespace

TEST_CASE("1 + G recovers the root count on diagonal parameters") {
    for (auto [p, r] : std::vector<std::pair<std::uint32_t, int>>{{5, 1}, {7, 1}, {11, 1}, {5, 2}}) {
        auto f = make_field(p, r);
        auto of = oracle::make_field(p, r);
        auto ctx = CharacterCtx::make(f);
        for (auto [d, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {5, 2}}) {
            if ((d * k * (d - k)) % static_cast<int>(p) == 0) continue;
            GnEvaluator G(*ctx, diagonal(d, k));
            const FqElem scale = f->from_int(k).pow(k) * f->from_int(d - k).pow(d - k);
            for (std::uint32_t lam = 1; lam < f->q(); ++lam) {
                const auto v = PadicRationalZq::from_int(ctx->zq(), 1) + G(scale * f->element(lam).pow(d));
                CAPTURE(p);
                CAPTURE(d);
                CAPTURE(lam);
                CHECK(v.to_integer(-1, d) == oracle_rq(of, d, k, lam));
            }
        }
    }
}

TEST_CASE("exponents, argument zero and precision") {
    auto f = make_field(7, 1);
    auto ctx = CharacterCtx::make(f);
    GnEvaluator G(*ctx, GParams{{Rational(1, 4), Rational(1, 2), Rational(3, 4)}, {0, Rational(1, 2), Rational(1, 2)}});
    for (std::uint32_t a = 0; a < 6; ++a) CHECK(std::abs(G.exponent(a)) <= 3);
    CHECK(G.min_exponent() <= 0);
    CHECK(G.table_precision() == G.precision() - G.min_exponent());
    CHECK(G(f->zero()).is_zero());
    for (const auto& t : f->elements()) CHECK(G(t).precision() >= ctx->precision());
}

TEST_CASE("parameter lists are permutation invariant and periodic mod 1") {
    auto f = make_field(5, 2);
    auto ctx = CharacterCtx::make(f);
    GParams a{{Rational(1, 3), Rational(1, 4), Rational(2, 3)}, {0, Rational(1, 2), Rational(1, 6)}};
    GParams b{{Rational(2, 3), Rational(1, 3), Rational(1, 4)}, {Rational(1, 6), 0, Rational(1, 2)}};
    GParams c{{Rational(4, 3), Rational(-3, 4), Rational(2, 3)}, {Rational(2), Rational(1, 2), Rational(-5, 6)}};
    GnEvaluator ga(*ctx, a), gb(*ctx, b), gc(*ctx, c);
    for (const auto& t : f->elements()) {
        CHECK(ga(t).equals(gb(t)));
        CHECK(ga(t).equals(gc(t)));
    }
}

TEST_CASE("parameter validation") {
    auto f = make_field(3, 1);
    auto ctx = CharacterCtx::make(f);
    CHECK_THROWS_AS(GnEvaluator(*ctx, GParams{{Rational(1, 6)}, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(GnEvaluator(*ctx, GParams{{Rational(1, 2)}, {}}), std::invalid_argument);
    CHECK(GParams{{Rational(1, 4), Rational(3, 4)}, {0, Rational(1, 2)}}.str() == "[1/4,3/4; 0,1/2]");
}

TEST_CASE("2G2[1/4,3/4; 0,1/2] vanishes at 6 over F_7") {
    auto f = make_field(7, 1);
    auto ctx = CharacterCtx::make(f);
    const auto v = gn_eval(*ctx, GParams{{Rational(1, 4), Rational(3, 4)}, {0, Rational(1, 2)}}, f->from_int(6));
    CHECK(v.to_integer(-10, 10) == 0);
}

TEST_CASE("2G2[1/3,2/3; 0,1/2](4) over F_5 is the root count of y^3-3y+1 minus one") {
    auto f = make_field(5, 1);
    auto of = oracle::make_field(5, 1);
    auto ctx = CharacterCtx::make(f);
    const auto v = gn_eval(*ctx, GParams{{Rational(1, 3), Rational(2, 3)}, {0, Rational(1, 2)}}, f->from_int(4));
    CHECK(v.to_integer(-5, 5) == oracle::roots(of, {1, oracle::mod(-3, 5), 0, 1}) - 1);
}

TEST_CASE("transformations between 2G2 and 3G3 values") {
    auto f5 = make_field(5, 1);
    auto c5 = CharacterCtx::make(f5);
    for (const auto& x : f5->elements()) {
        auto [l, r] = g_shift_3to2(*c5, x);
        CHECK(l.equals(r));
        if (x.is_zero()) continue;
        auto [l1, r1] = g2_transforms(*c5, x, 1);
        CHECK(l1.equals(r1));
    }
    auto [l0, r0] = g2_transforms(*c5, f5->zero(), 2);
    CHECK(l0.is_zero());
    CHECK(r0.is_zero());
    CHECK_THROWS(g2_transforms(*c5, f5->zero(), 1));
    CHECK_THROWS(g2_transforms(*c5, f5->zero(), 3));
    auto c3 = CharacterCtx::make(make_field(3, 2));
    CHECK_THROWS(g2_transforms(*c3, c3->field().one(), 3));

    auto f7 = make_field(7, 1);
    auto c7 = CharacterCtx::make(f7);
    for (const auto& t : f7->elements()) {
        if (t.is_zero()) continue;
        auto [l, r] = g2_transforms(*c7, t, 3);
        CHECK(l.equals(r));
    }
}

namespace {

struct Cubic {
    std::shared_ptr<const FieldCtx> f;
    std::shared_ptr<const CharacterCtx> ctx;
    oracle::Field of;
    FParams fp;
    explicit Cubic(std::uint32_t p)
        : f(make_field(p, 1)), ctx(CharacterCtx::make(f)), of(oracle::make_field(p, 1)) {
        const CharIndex chi3 = ctx->chi((p - 1) / 3);
        fp = FParams{{chi3, chi3.inverse()}, {ctx->trivial()}};
    }
};

}  // namespace

TEST_CASE("Greene 2F1 and McCarthy 2F1* against complex evaluations") {
    for (std::uint32_t p : {7u, 13u}) {
        Cubic s(p);
        oracle::Complex cx(s.of, oracle::smallest_generator(s.of));
        const std::int64_t q = p, n = p - 1, c3 = n / 3, cb = 2 * n / 3;
        GreeneF F(*s.ctx, s.fp);
        McCarthyFStar Fs(*s.ctx, s.fp);
        CHECK(F(s.f->zero()).is_zero());
        CHECK(Fs(s.f->zero()).is_zero());
        for (std::uint32_t x = 1; x < q; ++x) {
            std::complex<double> greene = 0, star = 0;
            for (std::int64_t a = 0; a < n; ++a) {
                greene += cx.binom(c3 + a, a) * cx.binom(cb + a, a) * cx.chi(a, x);
                star += cx.gauss(c3 + a) / cx.gauss(c3) * cx.gauss(cb + a) / cx.gauss(cb) * cx.gauss(-a) /
                        cx.gauss(0) * cx.gauss(-a) * cx.chi(a, x);
            }
            greene *= static_cast<double>(q) / n;
            star *= -1.0 / n;
            CAPTURE(x);
            REQUIRE(std::abs(std::imag(greene)) < 1e-9);
            REQUIRE(std::abs(std::imag(star)) < 1e-9);
            const auto pq = PadicRationalZq::from_int(s.ctx->zq(), q);
            CHECK((F(s.f->element(x)) * pq).to_integer(-20, 20) == std::llround(std::real(greene) * q));
            CHECK(Fs(s.f->element(x)).to_integer(-20, 20) == std::llround(std::real(star)));
        }
    }
}

TEST_CASE("on the cubic configuration G = -q F and F* = -G") {
    for (std::uint32_t p : {7u, 13u, 19u}) {
        Cubic s(p);
        GreeneF F(*s.ctx, s.fp);
        McCarthyFStar Fs(*s.ctx, s.fp);
        GnEvaluator G(*s.ctx, GParams{{Rational(1, 3), Rational(2, 3)}, {0, 0}});
        const auto mq = PadicRationalZq::from_int(s.ctx->zq(), -static_cast<std::int64_t>(p));
        for (std::uint32_t u = 1; u < p; ++u) {
            const FqElem t = s.f->element(u);
            CHECK(G(t).equals(mq * F(t.inverse())));
            CHECK(G(t).equals(-Fs(t.inverse())));
        }
    }
}
