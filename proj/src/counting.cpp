#include "ufmvt/counting.hpp"

#include <numeric>

#include "ufmvt/errors.hpp"
#include "ufmvt/parallel.hpp"

namespace ufmvt {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;
}

u64 r_bruteforce(u64 n, u64 a) {
    if (n == 0 || a == 0) throw std::invalid_argument("r_bruteforce: n, a must be positive");
    if (2 * u128(n) / a > 100000000) throw ResourceError("r_bruteforce: 2n/a > 10^8");
    // a/n = 1/x + 1/y with y >= x forces n/a < x <= 2n/a.
    u64 lo = n / a;                  // x must exceed n/a
    u64 hi = static_cast<u64>(2 * u128(n) / a);
    u64 count = 0;
    for (u64 x = lo + 1; x <= hi; ++x) {
        u128 den = u128(a) * x - n;  // positive since x > n/a
        if (den == 0) continue;
        u128 num = u128(n) * x;
        if (num % den != 0) continue;
        u128 y = num / den;
        if (y > x) count += 2;
        else if (y == x) count += 1;
    }
    return count;
}

u64 r_divisor_method(const Factorization& n_fact, u64 a) {
    if (a == 0) throw std::invalid_argument("r_divisor_method: a must be positive");
    u64 n = n_fact.value;
    Factorization n2 = square(n_fact);
    u64 target = (a - n % a) % a;    // the class of -n mod a
    u64 count = 0;
    for (u64 u : divisors(n2)) {
        if (u % a == target && (n2.value / u) % a == target) ++count;
    }
    return count;
}

u64 r_divisor_method(u64 n, u64 a) { return r_divisor_method(factorize(n), a); }

u64 s_direct(u64 n_max, u64 a) {
    if (a == 0) throw std::invalid_argument("s_direct: a must be positive");
    if (n_max > 10000000) throw ResourceError("s_direct: N > 10^7");
    if (n_max == 0) return 0;
    SpfTable spf(n_max);
    return parallel_sum(1, n_max + 1, [&](u64 n) -> u64 {
        if (std::gcd(n, a) != 1) return 0;
        return r_divisor_method(spf.factorize(n), a);
    });
}

u64 s_sieve(u64 n_max, u64 a) {
    if (a == 0) throw std::invalid_argument("s_sieve: a must be positive");
    if (n_max > 100000000) throw ResourceError("s_sieve: N > 10^8");
    if (n_max == 0) return 0;
    auto mu = mobius_sieve(n_max);
    // coprime[r] and, for coprime r, the class of -r mod a.
    std::vector<std::uint8_t> coprime(a);
    for (u64 r = 0; r < a; ++r) coprime[r] = std::gcd(r, a) == 1 ? 1 : 0;
    // S(N;a) = #{(n1,n2,n3): n1 n2 n3 <= N, n1 squarefree, all coprime to a,
    //           n2 + n3 = 0 (mod a)}.  For fixed (n1, n2) the n3 count is a
    //  closed-form residue-class count: every n3 = -n2 (mod a) is
    // automatically coprime to a when n2 is.
    return parallel_sum(1, n_max + 1, [&](u64 n1) -> u64 {
        if (mu[n1] == 0 || !coprime[n1 % a]) return 0;
        u64 m = n_max / n1;
        u64 total = 0;
        for (u64 n2 = 1; n2 <= m; ++n2) {
            if (!coprime[n2 % a]) continue;
            u64 x = m / n2;                 // n3 <= x
            if (a == 1) { total += x; continue; }
            u64 r = a - n2 % a;             // smallest positive n3 = -n2 (mod a)
            if (x >= r) total += (x - r) / a + 1;
        }
        return total;
    });
}

u64 t_from_s(u64 n_max, u64 a) {
    if (a == 0) throw std::invalid_argument("t_from_s: a must be positive");
    u64 total = 0;
    for (u64 d : divisors(factorize(a))) {
        u64 nd = n_max / d;
        if (nd == 0) continue;
        total += s_sieve(nd, a / d);
    }
    return total;
}

u64 u_direct(u64 n_max) {
    if (n_max > (u64(1) << 20)) throw ResourceError("u_direct: N > 2^20");
    if (n_max == 0) return 0;
    auto mu = mobius_sieve(n_max);
    SpfTable spf(2 * n_max);  // factors n2 + n3 <= 2N
    // U(N) = sum over squarefree n1, pairs n2*n3 <= N/n1, of the number of
    // divisors a of n2+n3 with gcd(a, n1*n2) = 1.  (gcd(a,n3)=1 follows from
    // n3 = -n2 mod a.)  Divisors of s = n2+n3 are counted from the spf
    // factorization, skipping primes dividing n1*n2.
    return parallel_sum(1, n_max + 1, [&](u64 n1) -> u64 {
        if (mu[n1] == 0) return 0;
        u64 m = n_max / n1;
        u64 total = 0;
        for (u64 n2 = 1; n2 <= m; ++n2) {
            u64 h = m / n2;
            for (u64 n3 = 1; n3 <= h; ++n3) {
                u64 s = n2 + n3;
                u64 cnt = 1;
                while (s > 1) {
                    u64 p = spf.spf(s);
                    std::uint32_t e = 0;
                    while (s % p == 0) { s /= p; ++e; }
                    if (n1 % p != 0 && n2 % p != 0) cnt *= e + 1;
                }
                total += cnt;
            }
        }
        return total;
    });
}

u64 r_k_bruteforce(u64 n, u64 a, unsigned k) {
    if (n == 0 || a == 0) throw std::invalid_argument("r_k_bruteforce: n, a must be positive");
    if (k < 2 || k > 4) throw ResourceError("r_k_bruteforce: k must be in [2, 4]");
    const u64 bound = 1000000;
    u64 g = std::gcd(a, n);
    u64 num = a / g, den = n / g;
    // Enumerate non-decreasing tuples, tracking the multiset shape so each
    // one is weighted by its number of distinct orderings.
    struct Ctx {
        u64 bound;
        u64 count = 0;
        std::vector<u64> stack;
        void rec(u64 num, u64 den, unsigned left, u64 x_min) {
            if (left == 1) {
                if (num != 0 && den % num == 0) {
                    u64 x = den / num;
                    if (x >= x_min && x <= bound) {
                        stack.push_back(x);
                        count += orderings();
                        stack.pop_back();
                    }
                }
                return;
            }
            u64 lo = std::max<u64>(x_min, den / num + (den % num != 0 ? 1 : 0));
            u64 hi = std::min<u64>(bound, static_cast<u64>(u128(left) * den / num));
            for (u64 x = lo; x <= hi; ++x) {
                u128 rn = u128(num) * x - den;
                if (rn == 0) continue;  // would leave zero for remaining terms
                u128 rd = u128(den) * x;
                u128 aa = rn, bb = rd;
                while (bb) { u128 t = aa % bb; aa = bb; bb = t; }
                u128 nrn = rn / aa, nrd = rd / aa;
                if (nrd > u128(UINT64_MAX) || nrn > u128(UINT64_MAX)) continue;
                stack.push_back(x);
                rec(static_cast<u64>(nrn), static_cast<u64>(nrd), left - 1, x);
                stack.pop_back();
            }
        }
        u64 orderings() const {
            u64 k = stack.size();
            u64 fact = 1;
            for (u64 i = 2; i <= k; ++i) fact *= i;
            u64 i = 0;
            while (i < k) {
                u64 j = i;
                while (j < k && stack[j] == stack[i]) ++j;
                u64 run = j - i, rf = 1;
                for (u64 r = 2; r <= run; ++r) rf *= r;
                fact /= rf;
                i = j;
            }
            return fact;
        }
    };
    Ctx ctx{bound};
    ctx.rec(num, den, k, 1);
    return ctx.count;
}

}  // namespace ufmvt
