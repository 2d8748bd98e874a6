#include "gwchi/numtheory.hpp"

#include "gwchi/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace gwchi::nt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Brent's cycle-finding variant of Pollard's rho. n must be odd, composite,
// and free of factors below the trial-division bound.
u64 pollard_brent(u64 n) {
    u64 c = 1;
    for (;;) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int lam = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < lam; ++i) y = (mulmod(y, y, n) + c) % n;
            int k = 0;
            while (k < lam && d == 1) {
                const int bound = std::min(128, lam - k);
                u64 ys = y;
                for (int i = 0; i < bound; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    const u64 diff = x > y ? x - y : y - x;
                    q = mulmod(q, diff ? diff : 1, n);
                }
                d = std::gcd(q, n);
                if (d == n) {
                    // Backtrack one step at a time to recover the factor.
                    d = 1;
                    u64 z = ys;
                    while (d == 1) {
                        z = (mulmod(z, z, n) + c) % n;
                        const u64 diff = x > z ? x - z : z - x;
                        d = std::gcd(diff ? diff : n, n);
                    }
                    break;
                }
                k += bound;
            }
            lam *= 2;
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_rec(u64 n, std::map<std::int64_t, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[static_cast<std::int64_t>(n)] += 1;
        return;
    }
    const u64 d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

int jacobi(std::int64_t a, std::int64_t n) {
    if (n <= 0 || n % 2 == 0) throw error("jacobi: modulus must be positive and odd");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n <= 0) throw error("factorize: argument must be positive");
    std::map<std::int64_t, int> acc;
    u64 m = static_cast<u64>(n);
    for (std::int64_t p = 2; p < 20000 && (u64)p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (m % static_cast<u64>(p) == 0) {
            acc[p] += 1;
            m /= static_cast<u64>(p);
        }
    }
    factor_rec(m, acc);
    return {acc.begin(), acc.end()};
}

std::int64_t squarefree_part(std::int64_t a) {
    if (a == 0) throw error("squarefree_part: argument must be nonzero");
    const int sign = a < 0 ? -1 : 1;
    std::int64_t r = 1;
    for (const auto& [p, e] : factorize(std::llabs(a))) {
        if (e % 2 == 1) r *= p;
    }
    return sign * r;
}

bool odd_prime_power(std::int64_t q, std::int64_t& p, int& e) {
    if (q < 3 || q % 2 == 0) return false;
    const auto f = factorize(q);
    if (f.size() != 1) return false;
    p = f[0].first;
    e = f[0].second;
    return true;
}

namespace {

// eps(u) = (u-1)/2 mod 2 for odd u; depends only on u mod 4.
int eps2(std::int64_t u) {
    const std::int64_t r = ((u % 4) + 4) % 4;
    return r == 3 ? 1 : 0;
}

// omega(u) = (u^2-1)/8 mod 2 for odd u; depends only on u mod 8.
int omega2(std::int64_t u) {
    const std::int64_t r = ((u % 8) + 8) % 8;
    return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(std::int64_t a, std::int64_t b, std::int64_t p) {
    if (a == 0 || b == 0) throw error("hilbert_symbol: arguments must be nonzero");
    if (p == real_place) return (a < 0 && b < 0) ? -1 : 1;
    if (p < 2 || !is_prime(static_cast<u64>(p))) throw error("hilbert_symbol: place must be a prime or 0 (real)");

    int alpha = 0, beta = 0;
    std::int64_t u = a, v = b;
    while (u % p == 0) {
        u /= p;
        ++alpha;
    }
    while (v % p == 0) {
        v /= p;
        ++beta;
    }

    if (p == 2) {
        const int exp = eps2(u) * eps2(v) + alpha * omega2(v) + beta * omega2(u);
        return exp % 2 == 0 ? 1 : -1;
    }
    const int eps_p = (p % 4 == 3) ? 1 : 0;  // (p-1)/2 mod 2
    int exp = alpha * beta * eps_p;
    int sym = exp % 2 == 0 ? 1 : -1;
    if (beta % 2 == 1) sym *= jacobi(u, p);
    if (alpha % 2 == 1) sym *= jacobi(v, p);
    return sym;
}

}  // namespace gwchi::nt
