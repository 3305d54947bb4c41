#pragma once

#include <cstdint>
#include <optional>

#include "hypfq/fields.hpp"

namespace hypfq {

// D: X1^d + X2^d = d lambda X1^k X2^{d-k}.
struct DiagonalSurfaceParams {
    int d = 2;
    int k = 1;
    FqElem lambda;

    // Throws std::invalid_argument unless d >= 2, 1 <= k < d and lambda != 0.
    void validate() const;
    // p does not divide d k (d-k).
    bool p_admissible() const;
};

// Points of D in P^1(F_q), by enumeration of the q+1 projective points.
std::int64_t count_projective_D(const DiagonalSurfaceParams& params);
// Solutions (x1, x2) in F_q^2.
std::int64_t count_affine_N(const DiagonalSurfaceParams& params);
// Distinct roots of y^{d-k}(1-y)^k - (d lambda)^{-d}.
int r_q(const DiagonalSurfaceParams& params);
// Distinct roots of y^d - d lambda y^k + 1.
int r_q_prime(const DiagonalSurfaceParams& params);

// y^2 = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassCurve {
    FqElem a2, a4, a6;

    FqElem discriminant() const;
    bool is_singular() const { return discriminant().is_zero(); }
    // nullopt on a singular curve.
    std::optional<FqElem> j_invariant() const;
};

struct EcCount {
    std::int64_t points = 0;  // including the point at infinity
    std::int64_t a_q = 0;     // q + 1 - points
};

// Counts through phi-solvability over x. Throws std::domain_error on a
// singular curve unless allow_singular is set.
EcCount ec_count(const WeierstrassCurve& curve, bool allow_singular = false);

// C_a: x^3 + y^3 + 1 = 3 a x y. Throws std::domain_error when a^3 = 1.
std::int64_t hessian_count(const FqElem& a);
// Affine count plus the points [x:y:0] with x^3 + y^3 = 0.
std::int64_t hessian_count_projective(const FqElem& a);

}  // namespace hypfq
