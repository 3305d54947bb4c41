#include "hypfq/arith.hpp"

#include <limits>

namespace hypfq {

i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u64 invmod(u64 a, u64 m) {
    if (m == 1) return 0;
    i64 old_r = static_cast<i64>(a % m), r = static_cast<i64>(m);
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        i64 quot = old_r / r;
        i64 tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        __int128 ts = old_s - static_cast<__int128>(quot) * s;
        old_s = s;
        s = ts;
    }
    if (old_r != 1) throw std::domain_error("invmod: element is not invertible");
    __int128 res = old_s % static_cast<__int128>(m);
    if (res < 0) res += m;
    return static_cast<u64>(res);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

u64 checked_pow(u64 p, int e) {
    if (e < 0) throw std::domain_error("checked_pow: negative exponent");
    u64 r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > std::numeric_limits<u64>::max() / p) throw std::overflow_error("checked_pow: overflow");
        r *= p;
    }
    return r;
}

int max_storage_precision(u64 p) {
    const u64 limit = u64{1} << 62;
    int e = 0;
    u64 r = 1;
    while (r <= (limit - 1) / p) {
        r *= p;
        ++e;
    }
    return e;
}

int ord_p(i64 n, u64 p) {
    if (n == 0) throw std::domain_error("ord_p: zero");
    int v = 0;
    i64 pp = static_cast<i64>(p);
    while (n % pp == 0) {
        n /= pp;
        ++v;
    }
    return v;
}

}  // namespace hypfq
