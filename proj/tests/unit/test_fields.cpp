#include <vector>

#include "doctest.h"
#include "hypfq/fields.hpp"
#include "../oracle.hpp"

using namespace hypfq;

namespace {

const std::vector<std::pair<std::uint32_t, int>> kFields{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {7, 2}, {3, 3}};

}  // namespace

TEST_CASE("modulus and generator are the smallest admissible choices") {
    for (auto [p, r] : kFields) {
        CAPTURE(p);
        CAPTURE(r);
        auto f = make_field(p, r);
        auto o = oracle::make_field(p, r);
        std::vector<oracle::i64> m(f->modulus().begin(), f->modulus().end());
        CHECK(m == o.modulus);
        CHECK(f->generator().code() == oracle::smallest_generator(o));
    }
}

TEST_CASE("F_9 uses x^2 + 1") {
    auto f = make_field(3, 2);
    CHECK(f->modulus() == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("arithmetic agrees with polynomial arithmetic") {
    for (auto [p, r] : kFields) {
        auto f = make_field(p, r);
        auto o = oracle::make_field(p, r);
        for (std::uint32_t a = 0; a < f->q(); ++a)
            for (std::uint32_t b = 0; b < f->q(); ++b) {
                const FqElem x = f->element(a), y = f->element(b);
                REQUIRE((x + y).code() == o.add(a, b));
                REQUIRE((x * y).code() == o.mul(a, b));
                REQUIRE((x - y).code() == o.add(a, o.neg(b)));
                if (b) REQUIRE((x / y).code() == o.mul(a, o.inv(b)));
            }
    }
}

TEST_CASE("trace, dlog and the quadratic character") {
    for (auto [p, r] : kFields) {
        auto f = make_field(p, r);
        auto o = oracle::make_field(p, r);
        const auto g = f->generator();
        for (std::uint32_t a = 0; a < f->q(); ++a) {
            const FqElem x = f->element(a);
            CHECK(trace(x) == o.trace(a));
            CHECK(legendre(x) == o.phi(a));
            if (a) CHECK(g.pow(dlog(x)) == x);
        }
        CHECK_THROWS_AS(dlog(f->zero()), std::domain_error);
    }
}

TEST_CASE("element syntax round-trips") {
    auto f = make_field(5, 2);
    CHECK(f->parse("3,1").code() == 3 + 1 * 5);
    CHECK(f->element(8).str() == "3,1");
    CHECK(f->parse("2").code() == 2);
    for (const auto& x : f->elements()) CHECK(f->parse(x.str()) == x);
    CHECK(f->parse("5,-1") == f->parse("0,4"));
    CHECK_THROWS(f->parse("1,2,3"));
}

TEST_CASE("Frobenius fixes exactly F_p") {
    auto f = make_field(7, 2);
    int fixed = 0;
    for (const auto& x : f->elements()) fixed += x.frobenius() == x;
    CHECK(fixed == 7);
}

TEST_CASE("count_distinct_roots") {
    auto f = make_field(5, 1);
    auto o = oracle::make_field(5, 1);
    // y^3 - 3y + 1 has no root over F_5
    std::vector<FqElem> h{f->from_int(1), f->from_int(-3), f->zero(), f->one()};
    CHECK(count_distinct_roots(h, *f) == oracle::roots(o, {1, 2, 0, 1}));
    CHECK(count_distinct_roots(h, *f) == 0);
    // y^2 - 1 = (y-1)(y+1)
    std::vector<FqElem> s{f->from_int(-1), f->zero(), f->one()};
    CHECK(count_distinct_roots(s, *f) == 2);
    std::vector<FqElem> z{f->zero()};
    CHECK_THROWS_AS(count_distinct_roots(z, *f), std::invalid_argument);
}
