#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hypfq {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    return (s >= m || s < a) ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 powmod(u64 base, u64 e, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return result;
}

// Reduce a signed integer into [0, m).
inline u64 reduce_signed(i64 a, u64 m) {
    if (a >= 0) return static_cast<u64>(a) % m;
    u64 r = static_cast<u64>(-(a + 1)) % m;  // avoids overflow at INT64_MIN
    return (m - 1 - r);
}

i64 gcd_i64(i64 a, i64 b);

// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
u64 invmod(u64 a, u64 m);

bool is_prime(u64 n);

// Distinct prime divisors in increasing order.
std::vector<u64> prime_factors(u64 n);

// p^e, throws std::overflow_error if it does not fit.
u64 checked_pow(u64 p, int e);

// Largest e with p^e < 2^62.
int max_storage_precision(u64 p);

// p-adic valuation of a nonzero integer.
int ord_p(i64 n, u64 p);

}  // namespace hypfq
