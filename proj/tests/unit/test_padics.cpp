#include <cmath>

#include "doctest.h"
#include "hypfq/padics.hpp"
#include "../oracle.hpp"

using namespace hypfq;

TEST_CASE("default precision is the least M with p^M > 4(q+1+2 sqrt q)^2") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
        for (int r = 1; r <= 2; ++r) {
            const double q = std::pow(p, r);
            const double bound = 4 * std::pow(q + 1 + 2 * std::sqrt(q), 2);
            int m = 0;
            double pm = 1;
            while (pm <= bound) pm *= p, ++m;
            CHECK(default_precision(p, r) == m);
        }
    CHECK(default_precision(5, 1) == 4);
}

TEST_CASE("storage precision") {
    for (u64 p : {3ull, 5ull, 13ull, 61ull}) {
        const int n = max_storage_precision(p);
        CHECK(checked_pow(p, n) < (u64{1} << 62));
        CHECK_THROWS_AS(checked_pow(p, 2 * n + 2), std::overflow_error);
        CHECK(static_cast<double>(checked_pow(p, n)) * p >= std::ldexp(1.0, 62));
    }
}

TEST_CASE("PadicInt ring operations") {
    PadicInt a(5, 3, 7), b(5, 3, -3);
    CHECK((a + b).residue() == 4);
    CHECK((a * b).residue() == oracle::mod(-21, 125));
    CHECK((a * a.inverse()).residue() == 1);
    CHECK_THROWS_AS(PadicInt(5, 3, 10).inverse(), std::domain_error);
    CHECK(PadicInt(5, 3, 7).str() == "7 mod 5^3");
}

TEST_CASE("Gamma_p agrees with the defining product") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const int m = 4;
        const oracle::i64 pm = checked_pow(p, m);
        auto table = gamma_table(p, m);
        for (oracle::i64 n = 0; n < 200; ++n) CHECK(table->at_integer(n) % pm == oracle::gamma_int(n, p, pm));
        for (oracle::i64 den : {2, 3, 4, 6}) {
            if (den % p == 0) continue;
            for (oracle::i64 num = 0; num < den; ++num)
                CHECK(gamma_p(Rational(num, den), p, m).residue() == oracle::gamma_rational(num, den, p, pm));
        }
    }
    CHECK_THROWS(gamma_p(Rational(1, 3), 3, 3));
}

TEST_CASE("Gamma_p(1/2)^2 = -(-1/p) for r = 1") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        const PadicInt g = gamma_p(Rational(1, 2), p, 3);
        const std::int64_t expected = (p % 4 == 1) ? -1 : 1;
        CHECK(g * g == PadicInt(p, 3, expected));
    }
}

TEST_CASE("Gamma table budget") {
    const u64 old = gamma_budget();
    set_gamma_budget(100);
    CHECK_THROWS_AS(gamma_table(17, 2), std::length_error);
    set_gamma_budget(old);
    CHECK(gamma_table(17, 2)->modulus() == 289);
}

TEST_CASE("Teichmuller lifts") {
    auto f = make_field(5, 2);
    ZqCtx zq(f, 6);
    for (const auto& t : f->elements()) {
        if (t.is_zero()) continue;
        const ZqElem w = teichmuller(t, zq);
        CHECK(w.reduce() == t);
        CHECK(w.pow(f->q()) == w);
        CHECK(w.pow(f->q() - 1) == zq.one());
    }
    CHECK_THROWS(teichmuller(f->zero(), zq));
}

TEST_CASE("PadicRationalZq arithmetic and integer recovery") {
    auto f = make_field(7, 1);
    ZqCtx zq(f, 10);
    const auto x = PadicRationalZq::from_rational(zq, Rational(3, 49));
    CHECK(x.valuation() == -2);
    const auto y = x * PadicRationalZq::from_int(zq, 49);
    CHECK(y.to_integer(-10, 10) == 3);
    CHECK((x - x).is_zero());
    const auto z = PadicRationalZq::from_int(zq, -5);
    CHECK(z.to_integer(-10, 10) == -5);
    CHECK_FALSE(x.to_integer(-10, 10).has_value());
    // precision too small for the requested range
    const auto w = PadicRationalZq(zq.from_int(3), 0, 1);
    CHECK_FALSE(w.to_integer(-10, 10).has_value());
}

TEST_CASE("Eisenstein ring: zeta is a primitive p-th root of unity") {
    auto f = make_field(5, 1);
    ZqCtx zq(f, 6);
    EisCtx eis(zq);
    const EisElem& z = eis.zeta();
    CHECK(z.pow(5) == eis.one());
    CHECK_FALSE(z == eis.one());
    // pi^{p-1} = -p
    CHECK(eis.pi().pow(4) == eis.from_zq(zq.from_int(-5)));
    CHECK(valuation(z - eis.one()) == Rational(1, 4));
}
