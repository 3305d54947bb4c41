#include "doctest.h"
#include "hypfq/varieties.hpp"
#include "../oracle.hpp"

using namespace hypfq;
using oracle::i64;

namespace {

const std::vector<std::pair<std::uint32_t, int>> kFields{{3, 1}, {5, 1}, {7, 1}, {11, 1}, {3, 2}, {5, 2}};

// X^d + Y^d - d lambda X^k Y^{d-k} at (x, y).
i64 dsurface(const oracle::Field& f, int d, int k, i64 lam, i64 x, i64 y) {
    const i64 lhs = f.add(f.pow(x, d), f.pow(y, d));
    const i64 rhs = f.mul(f.mul(f.from_int(d), lam), f.mul(f.pow(x, k), f.pow(y, d - k)));
    return f.add(lhs, f.neg(rhs));
}

i64 cubic(const oracle::Field& f, i64 a2, i64 a4, i64 a6, i64 x) {
    return f.add(f.add(f.pow(x, 3), f.mul(a2, f.pow(x, 2))), f.add(f.mul(a4, x), a6));
}

}  // namespace

TEST_CASE("diagonal counts match enumeration") {
    for (auto [p, r] : kFields) {
        auto f = make_field(p, r);
        auto o = oracle::make_field(p, r);
        for (int d = 2; d <= 5; ++d)
            for (int k = 1; k < d; ++k)
                for (std::uint32_t lam = 1; lam < f->q(); ++lam) {
                    DiagonalSurfaceParams dp{d, k, f->element(lam)};
                    i64 proj = dsurface(o, d, k, lam, 1, 0) == 0;
                    i64 aff = 0;
                    for (i64 x = 0; x < o.q; ++x) {
                        proj += dsurface(o, d, k, lam, x, 1) == 0;
                        for (i64 y = 0; y < o.q; ++y) aff += dsurface(o, d, k, lam, x, y) == 0;
                    }
                    REQUIRE(count_projective_D(dp) == proj);
                    REQUIRE(count_affine_N(dp) == aff);
                }
    }
}

TEST_CASE("(X-Y)^2 over F_5 has one point") {
    auto f = make_field(5, 1);
    DiagonalSurfaceParams dp{2, 1, f->one()};
    CHECK(count_projective_D(dp) == 1);
    CHECK(r_q(dp) == 1);
    CHECK(r_q_prime(dp) == 1);
}

TEST_CASE("root counts r_q and r_q' against enumeration") {
    auto f = make_field(7, 1);
    auto o = oracle::make_field(7, 1);
    for (std::uint32_t lam = 1; lam < 7; ++lam) {
        DiagonalSurfaceParams dp{5, 2, f->element(lam)};
        const i64 c = o.inv(o.pow(o.mul(o.from_int(5), lam), 5));
        int rq = 0, rqp = 0;
        for (i64 y = 0; y < 7; ++y) {
            rq += o.mul(o.pow(y, 3), o.pow(o.add(1, o.neg(y)), 2)) == c;
            rqp += o.add(o.add(o.pow(y, 5), o.neg(o.mul(o.mul(o.from_int(5), lam), o.pow(y, 2)))), 1) == 0;
        }
        CHECK(r_q(dp) == rq);
        CHECK(r_q_prime(dp) == rqp);
        CHECK(r_q(dp) == count_projective_D(dp));
    }
    CHECK_THROWS_AS((DiagonalSurfaceParams{3, 3, f->one()}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DiagonalSurfaceParams{3, 1, f->zero()}.validate()), std::invalid_argument);
}

TEST_CASE("elliptic curve counts and singularity") {
    for (auto [p, r] : std::vector<std::pair<std::uint32_t, int>>{{5, 1}, {7, 1}, {11, 1}, {3, 2}}) {
        auto f = make_field(p, r);
        auto o = oracle::make_field(p, r);
        for (std::uint32_t a2 = 0; a2 < std::min<std::uint32_t>(f->q(), 3); ++a2)
            for (std::uint32_t a4 = 0; a4 < f->q(); ++a4)
                for (std::uint32_t a6 = 0; a6 < f->q(); ++a6) {
                    WeierstrassCurve E{f->element(a2), f->element(a4), f->element(a6)};
                    i64 pts = 1;
                    bool repeated = false;
                    for (i64 x = 0; x < o.q; ++x) {
                        const i64 v = cubic(o, a2, a4, a6, x);
                        for (i64 y = 0; y < o.q; ++y) pts += o.mul(y, y) == v;
                        // f'(x) = 3x^2 + 2 a2 x + a4
                        const i64 d = o.add(o.add(o.mul(o.from_int(3), o.pow(x, 2)), o.mul(o.mul(o.from_int(2), a2), x)), a4);
                        repeated |= v == 0 && d == 0;
                    }
                    REQUIRE(E.is_singular() == repeated);
                    if (repeated) {
                        CHECK_THROWS_AS(ec_count(E), std::domain_error);
                        CHECK_FALSE(E.j_invariant().has_value());
                    }
                    const EcCount c = ec_count(E, true);
                    REQUIRE(c.points == pts);
                    REQUIRE(c.a_q == static_cast<i64>(f->q()) + 1 - pts);
                }
    }
}

TEST_CASE("y^2 = x^3 + x over F_5") {
    auto f = make_field(5, 1);
    WeierstrassCurve E{f->zero(), f->one(), f->zero()};
    const EcCount c = ec_count(E);
    CHECK(c.points == 4);
    CHECK(c.a_q == 2);
    CHECK(E.j_invariant() == f->from_int(1728));
}

TEST_CASE("Hessian counts") {
    for (auto [p, r] : std::vector<std::pair<std::uint32_t, int>>{{5, 1}, {7, 1}, {11, 1}, {5, 2}}) {
        auto f = make_field(p, r);
        auto o = oracle::make_field(p, r);
        for (std::uint32_t a = 0; a < f->q(); ++a) {
            const FqElem ae = f->element(a);
            if (ae.pow(3).is_one()) {
                CHECK_THROWS_AS(hessian_count(ae), std::domain_error);
                continue;
            }
            i64 aff = 0, inf = 0;
            for (i64 x = 0; x < o.q; ++x) {
                for (i64 y = 0; y < o.q; ++y) {
                    const i64 lhs = o.add(o.add(o.pow(x, 3), o.pow(y, 3)), 1);
                    aff += lhs == o.mul(o.mul(o.mul(o.from_int(3), a), x), y);
                }
                inf += o.add(o.pow(x, 3), 1) == 0;  // [x:1:0]
            }
            CHECK(hessian_count(ae) == aff);
            CHECK(hessian_count_projective(ae) == aff + inf);
        }
    }
}
