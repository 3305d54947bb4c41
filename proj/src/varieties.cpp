#include "hypfq/varieties.hpp"

#include <stdexcept>
#include <vector>

namespace hypfq {

void DiagonalSurfaceParams::validate() const {
    if (d < 2 || k < 1 || k >= d) throw std::invalid_argument("diagonal surface: need d >= 2 and 1 <= k < d");
    if (!lambda.ctx_ptr()) throw std::invalid_argument("diagonal surface: lambda has no field");
    if (lambda.is_zero()) throw std::invalid_argument("diagonal surface: lambda must be nonzero");
}

bool DiagonalSurfaceParams::p_admissible() const {
    const std::int64_t p = lambda.ctx().p();
    return (static_cast<std::int64_t>(d) % p) && (static_cast<std::int64_t>(k) % p) && (static_cast<std::int64_t>(d - k) % p);
}

namespace {

// pw[x] = code of x^e for every code x.
std::vector<std::uint32_t> power_table(const FieldCtx& f, int e) {
    std::vector<std::uint32_t> pw(f.q());
    for (std::uint32_t x = 0; x < f.q(); ++x) pw[x] = f.element(x).pow(e).code();
    return pw;
}

}  // namespace

std::int64_t count_projective_D(const DiagonalSurfaceParams& params) {
    params.validate();
    const FieldCtx& f = params.lambda.ctx();
    const FqElem dl = f.from_int(params.d) * params.lambda;
    auto on_curve = [&](const FqElem& x1, const FqElem& x2) {
        return (x1.pow(params.d) + x2.pow(params.d) - dl * x1.pow(params.k) * x2.pow(params.d - params.k)).is_zero();
    };
    std::int64_t count = on_curve(f.one(), f.zero()) ? 1 : 0;
    for (const auto& x : f.elements())
        if (on_curve(x, f.one())) ++count;
    return count;
}

std::int64_t count_affine_N(const DiagonalSurfaceParams& params) {
    params.validate();
    const FieldCtx& f = params.lambda.ctx();
    const std::uint32_t q = f.q();
    const auto pd = power_table(f, params.d);
    const auto pk = power_table(f, params.k);
    const auto pdk = power_table(f, params.d - params.k);
    const std::uint32_t dl = (f.from_int(params.d) * params.lambda).code();
    std::int64_t count = 0;
    for (std::uint32_t x1 = 0; x1 < q; ++x1) {
        const std::uint32_t c1 = f.mul_code(dl, pk[x1]);
        for (std::uint32_t x2 = 0; x2 < q; ++x2) {
            std::uint32_t lhs = f.add_code(pd[x1], pd[x2]);
            if (lhs == f.mul_code(c1, pdk[x2])) ++count;
        }
    }
    return count;
}

int r_q(const DiagonalSurfaceParams& params) {
    params.validate();
    const FieldCtx& f = params.lambda.ctx();
    const int d = params.d, k = params.k;
    const FqElem dl = f.from_int(d) * params.lambda;
    if (dl.is_zero()) throw std::invalid_argument("r_q: d lambda is not invertible");
    std::vector<FqElem> poly(d + 1, f.zero());
    std::int64_t binom = 1;
    for (int j = 0; j <= k; ++j) {
        poly[d - k + j] += f.from_int(j % 2 ? -binom : binom);
        binom = binom * (k - j) / (j + 1);
    }
    poly[0] -= dl.pow(-d);
    return count_distinct_roots(poly, f);
}

int r_q_prime(const DiagonalSurfaceParams& params) {
    params.validate();
    const FieldCtx& f = params.lambda.ctx();
    std::vector<FqElem> poly(params.d + 1, f.zero());
    poly[params.d] = f.one();
    poly[params.k] -= f.from_int(params.d) * params.lambda;
    poly[0] += f.one();
    return count_distinct_roots(poly, f);
}

FqElem WeierstrassCurve::discriminant() const {
    const FieldCtx& f = a2.ctx();
    auto n = [&f](std::int64_t v) { return f.from_int(v); };
    const FqElem b2 = n(4) * a2, b4 = n(2) * a4, b6 = n(4) * a6;
    const FqElem b8 = n(4) * a2 * a6 - a4 * a4;
    return -(b2 * b2 * b8) - n(8) * b4 * b4 * b4 - n(27) * b6 * b6 + n(9) * b2 * b4 * b6;
}

std::optional<FqElem> WeierstrassCurve::j_invariant() const {
    const FqElem disc = discriminant();
    if (disc.is_zero()) return std::nullopt;
    const FieldCtx& f = a2.ctx();
    const FqElem b2 = f.from_int(4) * a2, b4 = f.from_int(2) * a4;
    const FqElem c4 = b2 * b2 - f.from_int(24) * b4;
    return c4 * c4 * c4 / disc;
}

EcCount ec_count(const WeierstrassCurve& curve, bool allow_singular) {
    if (!allow_singular && curve.is_singular()) throw std::domain_error("ec_count: singular curve");
    const FieldCtx& f = curve.a2.ctx();
    EcCount out;
    out.points = 1;
    for (const auto& x : f.elements()) out.points += 1 + legendre(((x + curve.a2) * x + curve.a4) * x + curve.a6);
    out.a_q = static_cast<std::int64_t>(f.q()) + 1 - out.points;
    return out;
}

std::int64_t hessian_count(const FqElem& a) {
    const FieldCtx& f = a.ctx();
    if (a.pow(3).is_one()) throw std::domain_error("hessian_count: a^3 = 1");
    const std::uint32_t q = f.q();
    const auto cube = power_table(f, 3);
    const std::uint32_t a3 = (f.from_int(3) * a).code();
    std::int64_t count = 0;
    for (std::uint32_t x = 0; x < q; ++x) {
        const std::uint32_t lhs0 = f.add_code(cube[x], 1);
        const std::uint32_t ax = f.mul_code(a3, x);
        for (std::uint32_t y = 0; y < q; ++y)
            if (f.add_code(lhs0, cube[y]) == f.mul_code(ax, y)) ++count;
    }
    return count;
}

std::int64_t hessian_count_projective(const FqElem& a) {
    const FieldCtx& f = a.ctx();
    std::vector<FqElem> poly{f.one(), f.zero(), f.zero(), f.one()};
    return hessian_count(a) + count_distinct_roots(poly, f);
}

}  // namespace hypfq
