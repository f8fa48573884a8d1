// arith.hpp -- integer arithmetic primitives: factorization, divisor
// enumeration, multiplicative-function sieves.

#pragma once

#include <cstdint>
#include <vector>

namespace ufmvt {

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;
    bool operator==(const PrimePower&) const = default;
};

// Prime-power decomposition of a positive 64-bit integer.
// factors are sorted by prime, exponents >= 1; the empty list is 1.
struct Factorization {
    std::uint64_t value = 1;
    std::vector<PrimePower> factors;
};

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(std::uint64_t n);

// Complete factorization: trial division to 10^6, then Miller-Rabin plus
// Brent-rho (fixed seed) for the remaining large cofactor.
// Rejects n = 0.
Factorization factorize(std::uint64_t n);

// All divisors, ascending.  Throws ResourceError when the divisor count
// would exceed 10^7.
std::vector<std::uint64_t> divisors(const Factorization& f);

// Factorization of value^2 (exponents doubled).  value must be < 2^32 so
// the square stays in 64 bits.
Factorization square(const Factorization& f);

// Euler phi from a factorization.
std::uint64_t totient(const Factorization& f);

// mu(n) for n = 1..N.  N capped at 10^8.
std::vector<std::int8_t> mobius_sieve(std::uint64_t n_max);

// Smallest prime factor for 2..limit; spf(1) = 1 by convention.
// Built once, then read-only.
class SpfTable {
public:
    explicit SpfTable(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    std::uint32_t spf(std::uint64_t n) const { return spf_[n]; }

    // Factorize n <= limit by repeated spf division.
    Factorization factorize(std::uint64_t n) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace ufmvt
