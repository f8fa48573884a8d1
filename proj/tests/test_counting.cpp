#include <doctest.h>

#include <numeric>

#include "ufmvt/arith.hpp"
#include "ufmvt/counting.hpp"

using namespace ufmvt;

TEST_CASE("r_bruteforce examples") {
    CHECK(r_bruteforce(1, 1) == 1);   // 1 = 1/2 + 1/2
    CHECK(r_bruteforce(3, 7) == 0);   // a > 2n
    CHECK(r_bruteforce(4, 3) == 2);   // (2,4) and (4,2)
}

TEST_CASE("r_divisor_method examples") {
    CHECK(r_divisor_method(3, 2) == 3);
    CHECK(r_divisor_method(4, 3) == 2);
    CHECK(r_divisor_method(5, 1) == 3);  // d(25)
}

TEST_CASE("divisor method equals brute force on a grid") {
    // wider n x a sweep lives in the acceptance suite
    for (std::uint64_t n = 1; n <= 300; ++n) {
        for (std::uint64_t a = 1; a <= 20; ++a) {
            REQUIRE(r_divisor_method(n, a) == r_bruteforce(n, a));
        }
    }
}

TEST_CASE("r with a=1 counts divisors of n^2") {
    SpfTable spf(10000);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        auto f = spf.factorize(n);
        std::uint64_t d = 1;
        for (const auto& pp : f.factors) d *= 2 * pp.exponent + 1;
        REQUIRE(r_divisor_method(f, 1) == d);
    }
}

TEST_CASE("R is even for a >= 3 coprime to n") {
    for (std::uint64_t n = 1; n <= 2000; n += 7) {
        for (std::uint64_t a = 3; a <= 20; ++a) {
            if (std::gcd(n, a) != 1) continue;
            REQUIRE(r_divisor_method(n, a) % 2 == 0);
        }
    }
}

TEST_CASE("R vanishes when a > 2n") {
    for (std::uint64_t n = 1; n <= 50; ++n) {
        REQUIRE(r_bruteforce(n, 2 * n + 1) == 0);
        REQUIRE(r_divisor_method(n, 2 * n + 1) == 0);
    }
}

TEST_CASE("s_direct examples") {
    CHECK(s_direct(4, 3) == 4);
    CHECK(s_direct(1, 1) == 1);
    std::uint64_t brute = 0;
    for (std::uint64_t n = 1; n <= 10; ++n) {
        if (std::gcd(n, 7ull) == 1) brute += r_bruteforce(n, 7);
    }
    CHECK(s_direct(10, 7) == brute);
}

TEST_CASE("s_sieve equals s_direct") {
    CHECK(s_sieve(4, 3) == 4);
    for (std::uint64_t a = 1; a <= 20; ++a) {
        for (std::uint64_t n_max : {10ull, 100ull, 1000ull}) {
            REQUIRE(s_sieve(n_max, a) == s_direct(n_max, a));
        }
    }
    CHECK(s_sieve(100000, 7) == s_direct(100000, 7));
}

TEST_CASE("s_sieve with a=1 sums d(n^2)") {
    SpfTable spf(100);
    std::uint64_t expect = 0;
    for (std::uint64_t n = 1; n <= 100; ++n) {
        std::uint64_t d = 1;
        for (const auto& pp : spf.factorize(n).factors) d *= 2 * pp.exponent + 1;
        expect += d;
    }
    CHECK(s_sieve(100, 1) == expect);
}

TEST_CASE("S is non-decreasing in N") {
    for (std::uint64_t a : {1ull, 3ull, 8ull}) {
        std::uint64_t prev = 0;
        for (std::uint64_t n_max = 1; n_max <= 200; ++n_max) {
            std::uint64_t v = s_sieve(n_max, a);
            REQUIRE(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("t_from_s structure and brute force") {
    CHECK(t_from_s(100, 1) == s_sieve(100, 1));
    CHECK(t_from_s(4, 2) == s_sieve(4, 2) + s_sieve(2, 1));
    for (std::uint64_t a = 1; a <= 12; ++a) {
        std::uint64_t brute = 0;
        for (std::uint64_t n = 1; n <= 500; ++n) brute += r_bruteforce(n, a);
        REQUIRE(t_from_s(500, a) == brute);
    }
}

TEST_CASE("u_direct matches the double-sum oracle") {
    // oracle: sum over a <= 2N of S(N;a) by brute force
    auto oracle = [](std::uint64_t n_max) {
        std::uint64_t total = 0;
        for (std::uint64_t a = 1; a <= 2 * n_max; ++a) {
            for (std::uint64_t n = 1; n <= n_max; ++n) {
                if (std::gcd(n, a) == 1) total += r_bruteforce(n, a);
            }
        }
        return total;
    };
    CHECK(u_direct(1) == oracle(1));  // = 2: R(1;1) and R(1;2) each contribute 1
    CHECK(u_direct(2) == oracle(2));
    CHECK(u_direct(100) == oracle(100));
}

TEST_CASE("u_direct equals sum of s_direct over a") {
    for (std::uint64_t n_max : {50ull, 300ull}) {
        std::uint64_t total = 0;
        for (std::uint64_t a = 1; a <= 2 * n_max; ++a) total += s_direct(n_max, a);
        REQUIRE(u_direct(n_max) == total);
    }
}

TEST_CASE("r_k examples") {
    CHECK(r_k_bruteforce(1, 1, 2) == 1);
    // k=2 agrees with r_bruteforce
    for (std::uint64_t n = 1; n <= 60; ++n) {
        for (std::uint64_t a = 1; a <= 6; ++a) {
            REQUIRE(r_k_bruteforce(n, a, 2) == r_bruteforce(n, a));
        }
    }
    // a = 2n: only x = y = n... verified against the k=2 oracle
    for (std::uint64_t n : {1ull, 5ull, 12ull}) {
        REQUIRE(r_k_bruteforce(n, 2 * n, 2) == r_bruteforce(n, 2 * n));
        REQUIRE(r_k_bruteforce(n, 2 * n, 2) == 1);
    }
}

TEST_CASE("r_3 of 1/x+1/y+1/z = 1/2 by exhaustive enumeration") {
    // independent oracle: all ordered triples with x,y,z <= 20 (any solution
    // of 1/2 with three unit fractions has parts <= 3*2*... well below 20)
    std::uint64_t expect = 0;
    for (int x = 1; x <= 42; ++x) {
        for (int y = 1; y <= 42; ++y) {
            for (int z = 1; z <= 42; ++z) {
                // 1/x + 1/y + 1/z == 1/2 in exact arithmetic
                long long lhs = 2ll * (y * z + x * z + x * y);
                long long rhs = 1ll * x * y * z;
                if (lhs == rhs) ++expect;
            }
        }
    }
    CHECK(r_k_bruteforce(2, 1, 3) == expect);
    CHECK(expect > 0);
}
