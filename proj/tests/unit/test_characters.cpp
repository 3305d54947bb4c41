#include <cmath>
#include <complex>

#include "doctest.h"
#include "hypfq/characters.hpp"
#include "../oracle.hpp"

using namespace hypfq;

namespace {

struct Setup {
    std::shared_ptr<const FieldCtx> f;
    std::shared_ptr<const CharacterCtx> ctx;
    oracle::Field of;
    Setup(std::uint32_t p, int r) : f(make_field(p, r)), ctx(CharacterCtx::make(f)), of(oracle::make_field(p, r)) {}
    PadicRationalZq num(std::int64_t v) const { return PadicRationalZq::from_int(ctx->zq(), v); }
};

}  // namespace

TEST_CASE("omega is a character of order q-1 with omega(0) = 0") {
    Setup s(7, 1);
    const auto& c = *s.ctx;
    const auto g = s.f->generator();
    CHECK(c.eval(1, g.code()) == c.omega_power(1));
    CHECK(c.eval(1, g.code()).pow(6) == c.zq().one());
    CHECK_FALSE(c.eval(1, g.code()).pow(3) == c.zq().one());
    for (std::uint32_t a = 0; a < 6; ++a) CHECK(c.eval(a, 0).is_zero());
    // the quadratic character is the Legendre symbol
    for (const auto& x : s.f->elements()) CHECK(c.eval(c.quadratic(), x) == c.zq().from_int(legendre(x)));
}

TEST_CASE("Jacobi sums: classical values") {
    for (auto [p, r] : std::vector<std::pair<std::uint32_t, int>>{{5, 1}, {7, 1}, {3, 2}}) {
        Setup s(p, r);
        const auto& c = *s.ctx;
        const std::int64_t q = s.f->q();
        CHECK(jacobi_sum(c, c.trivial(), c.trivial()) == c.zq().from_int(q - 2));
        for (std::uint32_t a = 1; a < q - 1; ++a) {
            const CharIndex A = c.chi(a);
            CHECK(jacobi_sum(c, A, c.trivial()) == c.zq().from_int(-1));
            CHECK(jacobi_sum(c, A, A.inverse()) == c.zq().from_int(-A.at_minus_one()));
            for (std::uint32_t b = 1; b < q - 1; ++b) {
                const CharIndex B = c.chi(b);
                if ((A * B).is_trivial()) continue;
                // |J(A,B)|^2 = q
                CHECK(jacobi_sum(c, A, B) * jacobi_sum(c, A.inverse(), B.inverse()) == c.zq().from_int(q));
            }
        }
    }
}

TEST_CASE("Gauss sums: norms, quadratic square and the two representations") {
    for (auto [p, r] : std::vector<std::pair<std::uint32_t, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
        Setup s(p, r);
        const auto& c = *s.ctx;
        const std::int64_t q = s.f->q();
        const auto& eis = c.eis();
        CHECK(c.gauss_sum_direct(c.trivial()) == eis.from_zq(c.zq().from_int(-1)));
        const EisElem gphi = c.gauss_sum_direct(c.quadratic());
        CHECK(gphi * gphi == eis.from_zq(c.zq().from_int(legendre(s.f->from_int(-1)) * q)));
        for (std::uint32_t a = 1; a < q - 1; ++a) {
            const CharIndex A = c.chi(a);
            GaussProduct gp(c);
            gp.mul(A).mul(A.inverse());
            CHECK(gp.value().equals(s.num(A.at_minus_one() * q)));
            const auto& gk = c.gauss_sum_gk(A);
            EisElem rebuilt = -(eis.from_zq(gk.unit).times_pi_power(gk.s));
            CHECK(rebuilt.congruent(c.gauss_sum_direct(A), gk.precision));
        }
    }
}

TEST_CASE("complex Gauss sums match an independent evaluation") {
    for (auto [p, r] : std::vector<std::pair<std::uint32_t, int>>{{5, 1}, {7, 1}, {3, 2}, {5, 2}}) {
        auto f = make_field(p, r);
        auto of = oracle::make_field(p, r);
        oracle::Complex cx(of, oracle::smallest_generator(of));
        for (std::uint32_t a = 0; a < f->q() - 1; ++a) {
            const auto g = complex_gauss_sum(*f, a);
            CHECK(std::abs(g - cx.gauss(a)) < 1e-9);
            if (a) CHECK(std::abs(std::norm(g) - f->q()) < 1e-8);
        }
    }
}

TEST_CASE("binomial coefficients with a trivial entry") {
    Setup s(7, 1);
    const auto& c = *s.ctx;
    oracle::Complex cx(s.of, oracle::smallest_generator(s.of));
    for (std::uint32_t a = 0; a < 6; ++a) {
        const auto b = binomial(c, c.chi(a), c.trivial());
        // q * binomial is an integer here
        const double expected = std::real(cx.binom(a, 0)) * 7;
        CHECK((b * s.num(7)).to_integer(-10, 10) == std::lround(expected));
    }
}

TEST_CASE("orthogonality and theta expansion") {
    Setup s(5, 2);
    const auto& c = *s.ctx;
    for (const auto& x : s.f->elements()) {
        const ZqElem sum = orthogonality_check(c, x);
        CHECK(sum == c.zq().from_int(x.is_one() ? 24 : 0));
        if (!x.is_zero()) CHECK(theta_expansion_check(c, x));
    }
    CHECK_THROWS(theta_expansion_check(c, s.f->zero()));
}

TEST_CASE("C(d,k,alpha) matches a complex evaluation") {
    for (auto [p, r] : std::vector<std::pair<std::uint32_t, int>>{{5, 1}, {7, 1}, {3, 2}}) {
        Setup s(p, r);
        oracle::Complex cx(s.of, oracle::smallest_generator(s.of));
        const std::int64_t n = s.f->q() - 1;
        for (auto [d, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {5, 2}}) {
            if ((d * k * (d - k)) % static_cast<int>(p) == 0) continue;
            for (std::uint32_t al = 1; al < s.f->q(); ++al) {
                std::complex<double> z = 0;
                for (std::int64_t a = 0; a < n; ++a)
                    z += cx.gauss(a * d) * cx.gauss(-a * (d - k)) * cx.chi(a, al) / cx.gauss(a * k);
                CAPTURE(d);
                CAPTURE(al);
                REQUIRE(std::abs(z.imag()) < 1e-6);
                const auto v = char_sum_C(*s.ctx, d, k, s.f->element(al));
                CHECK(v.to_integer(-100, 100) == std::llround(z.real()));
            }
        }
    }
}
