#include "ufmvt/arith.hpp"

#include <algorithm>
#include <numeric>

#include "ufmvt/errors.hpp"

namespace ufmvt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // These twelve bases are a known deterministic witness set for n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// Brent's cycle variant of Pollard rho.  Deterministic: the (c, x0) pairs
// are tried in a fixed order, so factorizations are reproducible.
u64 brent_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1; ; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int power = 1, lam = 1;
        auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            if (power == lam) { x = y; power *= 2; lam = 0; }
            y = step(y);
            ++lam;
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            q = mulmod(q, diff, n);
            if (lam % 64 == 0 || power == lam) {
                d = std::gcd(q, n);
                if (d != 1) break;
            }
        }
        if (d == 1) d = std::gcd(q, n);
        if (d != 1 && d != n) return d;
        // cycle collapsed or d == n: retry with the next c
    }
}

void factor_rec(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    if (is_prime(n)) { primes.push_back(n); return; }
    u64 d = brent_rho(n);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

}  // namespace

Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.value = n;
    std::vector<u64> primes;
    for (u64 p = 2; p <= 1000000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) { primes.push_back(p); n /= p; }
    }
    if (n > 1) {
        if (n < u64(1000000) * 1000000 || is_prime(n)) {
            // remaining cofactor below trial bound squared is prime
            primes.push_back(n);
        } else {
            factor_rec(n, primes);
        }
    }
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().prime == p) {
            ++f.factors.back().exponent;
        } else {
            f.factors.push_back({p, 1});
        }
    }
    return f;
}

std::vector<u64> divisors(const Factorization& f) {
    u64 count = 1;
    for (const auto& pp : f.factors) {
        count *= pp.exponent + 1;
        if (count > 10000000) throw ResourceError("divisors: more than 10^7 divisors");
    }
    std::vector<u64> divs{1};
    divs.reserve(count);
    for (const auto& pp : f.factors) {
        std::size_t base = divs.size();
        u64 pe = 1;
        for (std::uint32_t e = 1; e <= pp.exponent; ++e) {
            pe *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Factorization square(const Factorization& f) {
    if (f.value >= (u64(1) << 32)) throw ResourceError("square: value^2 overflows 64 bits");
    Factorization s;
    s.value = f.value * f.value;
    s.factors = f.factors;
    for (auto& pp : s.factors) pp.exponent *= 2;
    return s;
}

u64 totient(const Factorization& f) {
    u64 t = 1;
    for (const auto& pp : f.factors) {
        t *= pp.prime - 1;
        for (std::uint32_t e = 1; e < pp.exponent; ++e) t *= pp.prime;
    }
    return t;
}

std::vector<std::int8_t> mobius_sieve(u64 n_max) {
    if (n_max > 100000000) throw ResourceError("mobius_sieve: N > 10^8");
    std::vector<std::int8_t> mu(n_max + 1, 1);
    std::vector<bool> composite(n_max + 1, false);
    std::vector<std::uint32_t> primes;
    if (n_max >= 1) mu[1] = 1;
    for (u64 i = 2; i <= n_max; ++i) {
        if (!composite[i]) { primes.push_back(static_cast<std::uint32_t>(i)); mu[i] = -1; }
        for (u64 p : primes) {
            if (i * p > n_max) break;
            composite[i * p] = true;
            if (i % p == 0) { mu[i * p] = 0; break; }
            mu[i * p] = static_cast<std::int8_t>(-mu[i]);
        }
    }
    return mu;
}

SpfTable::SpfTable(u64 limit) : limit_(limit) {
    if (limit > 100000000) throw ResourceError("SpfTable: limit > 10^8");
    spf_.assign(limit + 1, 0);
    if (limit >= 1) spf_[1] = 1;
    std::vector<std::uint32_t> primes;
    for (u64 i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) { spf_[i] = static_cast<std::uint32_t>(i); primes.push_back(spf_[i]); }
        for (u64 p : primes) {
            if (p > spf_[i] || i * p > limit) break;
            spf_[i * p] = static_cast<std::uint32_t>(p);
        }
    }
}

Factorization SpfTable::factorize(u64 n) const {
    Factorization f;
    f.value = n;
    while (n > 1) {
        u64 p = spf_[n];
        std::uint32_t e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.factors.push_back({p, e});
    }
    return f;
}

}  // namespace ufmvt
