#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hypfq/characters.hpp"
#include "hypfq/padics.hpp"
#include "hypfq/rational.hpp"

namespace hypfq {

struct GParams {
    std::vector<Rational> top;
    std::vector<Rational> bottom;

    std::size_t n() const { return top.size(); }
    // Throws std::invalid_argument on unequal/empty lists or a denominator divisible by p.
    void validate(std::uint32_t p) const;
    std::string str() const;
};

// McCarthy's nGn over one field. The per-a coefficients
//   (-1)^{an} (-p)^{e_a} prod Gamma_p ratios
// are computed once; each evaluation is a single pass over a.
class GnEvaluator {
public:
    // precision < 0 selects the context's target precision.
    GnEvaluator(const CharacterCtx& ctx, GParams params, int precision = -1);

    PadicRationalZq operator()(const FqElem& t) const { return at_code(t.code()); }
    PadicRationalZq at_code(std::uint32_t code) const;

    const GParams& params() const { return params_; }
    int precision() const { return precision_; }
    int table_precision() const { return table_precision_; }
    std::int64_t min_exponent() const { return e_min_; }
    std::int64_t exponent(std::uint32_t a) const { return exponents_[a]; }

private:
    const CharacterCtx* ctx_;
    GParams params_;
    int precision_;
    int table_precision_ = 0;
    std::int64_t e_min_ = 0;
    std::vector<std::int64_t> exponents_;
    std::vector<u64> coeffs_;  // -1/(q-1) (-1)^{an+e_a} p^{e_a-e_min} unit_a, mod p^storage
};

PadicRationalZq gn_eval(const CharacterCtx& ctx, const GParams& params, const FqElem& t, int precision = -1);

struct FParams {
    std::vector<CharIndex> top;     // A_0..A_n
    std::vector<CharIndex> bottom;  // B_1..B_n
    void validate() const;
};

// Greene's {n+1}F_n.
class GreeneF {
public:
    GreeneF(const CharacterCtx& ctx, FParams params);
    PadicRationalZq operator()(const FqElem& x) const;

private:
    const CharacterCtx* ctx_;
    FParams params_;
    std::vector<ZqElem> coeffs_;
    std::int64_t v_ = 0;
};

// McCarthy's {n+1}F_n^*, Gauss sum ratios through Gross-Koblitz.
class McCarthyFStar {
public:
    McCarthyFStar(const CharacterCtx& ctx, FParams params);
    PadicRationalZq operator()(const FqElem& x) const;

private:
    const CharacterCtx* ctx_;
    FParams params_;
    std::vector<PadicRationalZq> coeffs_;
};

PadicRationalZq greene_f(const CharacterCtx& ctx, const FParams& params, const FqElem& x);
PadicRationalZq mccarthy_fstar(const CharacterCtx& ctx, const FParams& params, const FqElem& x);

using ValuePair = std::pair<PadicRationalZq, PadicRationalZq>;

// 3G3[1/4,1/2,3/4; 0,1/2,1/2 | x] against 2G2[1/4,3/4; 0,1/2 | x] + phi(x)/q.
ValuePair g_shift_3to2(const CharacterCtx& ctx, const FqElem& x, int precision = -1);

// The three 2G2 transformations; which in {1, 2, 3}.
ValuePair g2_transforms(const CharacterCtx& ctx, const FqElem& t, int which, int precision = -1);

// phi(x) as a p-adic integer (0 at x = 0).
PadicRationalZq phi_value(const CharacterCtx& ctx, const FqElem& x);

}  // namespace hypfq
