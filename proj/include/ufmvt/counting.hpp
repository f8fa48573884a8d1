// counting.hpp -- exact computation of the representation counts R(n;a),
// R_k(n;a) and their averages S(N;a), T(N;a), U(N), each by at least two
// independent methods that must agree.
//
// R(n;a) counts ordered pairs (x,y) of positive integers with
// a/n = 1/x + 1/y.  All averages are exact 64-bit integers.

#pragma once

#include <cstdint>
#include <vector>

#include "ufmvt/arith.hpp"

namespace ufmvt {

struct SolutionCount {
    std::uint64_t n = 0;
    std::uint64_t a = 0;
    std::uint64_t count = 0;
};

enum class AverageKind { S, T, U };

struct AverageTable {
    std::uint64_t a = 0;
    AverageKind kind = AverageKind::S;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;  // (N, value)
};

// Direct enumeration: x runs over n/a < x <= 2n/a, y = nx/(ax-n) when
// integral; y > x contributes 2 (both orders), y == x contributes 1.
// Throws ResourceError when 2n/a > 10^8.
std::uint64_t r_bruteforce(std::uint64_t n, std::uint64_t a);

// Divisor method: #{u | n^2 : u = -n (mod a) and n^2/u = -n (mod a)}.
// Valid without any coprimality hypothesis on (n, a).
std::uint64_t r_divisor_method(const Factorization& n_fact, std::uint64_t a);
std::uint64_t r_divisor_method(std::uint64_t n, std::uint64_t a);

// S(N;a) = sum of R(n;a) over n <= N with gcd(n,a) = 1, via per-n divisor
// counting backed by an SpfTable.  N capped at 10^7.
std::uint64_t s_direct(std::uint64_t n_max, std::uint64_t a);

// Same sum via the squarefree-kernel decomposition: triples n1*n2*n3 <= N,
// n1 squarefree, every part coprime to a, a | n2+n3.  The inner n3 count is
// a closed-form residue-class count, so the cost is about N log(N)/a.
// N capped at 10^8.
std::uint64_t s_sieve(std::uint64_t n_max, std::uint64_t a);

// T(N;a) = sum_{d|a} S(N/d; a/d).
std::uint64_t t_from_s(std::uint64_t n_max, std::uint64_t a);

// U(N) = sum_a S(N;a), computed by the triple-loop identity: for each
// squarefree n1 and pair n2*n3 <= N/n1, count divisors a of n2+n3 coprime
// to n1*n2.  N capped at 2^20.
std::uint64_t u_direct(std::uint64_t n_max);

// Ordered k-tuple count for a/n = 1/x_1 + ... + 1/x_k, k <= 4.
// Enumerates non-decreasing tuples and multiplies by the number of
// distinct orderings.  Denominators are capped at 10^6.
std::uint64_t r_k_bruteforce(std::uint64_t n, std::uint64_t a, unsigned k);

}  // namespace ufmvt
