// characters.hpp -- Dirichlet characters mod a with exact root-of-unity
// values, the coefficients a_n(chi), the character decomposition of S(N;a),
// and truncated L(1,chi) evaluations.
//
// Characters are indexed by exponent tuples against fixed generators of the
// unit group (primitive roots for odd prime powers, the {-1, 5} pair for
// powers of two).  Values are kept as exact rotations k/d and converted to
// complex<double> only at evaluation boundaries.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ufmvt/arith.hpp"

namespace ufmvt {

// exp(2*pi*i * num/den), or zero when the argument is not a unit.
struct CharacterValue {
    bool zero = true;
    std::uint64_t num = 0;  // 0 <= num < den
    std::uint64_t den = 1;

    std::complex<double> to_complex() const;
    CharacterValue conj() const;
    CharacterValue operator*(const CharacterValue& o) const;
    bool operator==(const CharacterValue&) const = default;

    static CharacterValue one() { return {false, 0, 1}; }
    static CharacterValue rotation(std::uint64_t k, std::uint64_t d);
};

class CharacterGroup {
public:
    explicit CharacterGroup(std::uint64_t modulus);

    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t size() const { return phi_; }           // = phi(a)
    std::size_t principal_index() const { return 0; }

    // chi_idx in [0, size()).  Exact value of chi(m).
    CharacterValue eval(std::size_t chi_idx, std::uint64_t m) const;

    // Discrete-log tuple of a unit m against the group generators;
    // the exact orthogonality predicate is "all components zero".
    std::vector<std::uint64_t> dlog(std::uint64_t m) const;
    const std::vector<std::uint64_t>& component_orders() const { return orders_; }

    bool is_principal(std::size_t chi_idx) const;
    // chi(-1), always +1 or -1 (or +1 for a <= 2 where -1 = 1).
    int parity(std::size_t chi_idx) const;

    // a_n(chi) = conj(chi)(n) * sum_{u | n^2} chi(u), computed from the
    // factorization of n by multiplicativity.
    std::complex<double> a_n(std::size_t chi_idx, const Factorization& n_fact) const;

private:
    std::uint64_t modulus_;
    std::uint64_t phi_;
    // One entry per cyclic component of the unit group.
    struct Component {
        std::uint64_t prime_power;   // p^k slice of the modulus (2^e contributes two)
        std::uint64_t order;
    };
    std::vector<std::uint64_t> orders_;          // cyclic component orders
    std::vector<std::uint64_t> comp_moduli_;     // prime-power modulus per component
    std::vector<std::vector<std::uint32_t>> dlog_tables_;  // residue -> exponent
    // exponent tuple per character, row-major
    std::vector<std::vector<std::uint64_t>> char_exponents_;
    std::vector<std::uint64_t> dlog_neg1_;       // dlog of -1, cached
};

// S(N;a) recomputed through the character decomposition
//   S(N;a) = 1/phi(a) * sum_chi conj(chi)(-1) * sum_{n<=N} a_n(chi).
// Evaluated in complex doubles; throws ConsistencyError when the result is
// not within 1e-6 of a real integer.  Budget: N <= 1e5, a <= 100.
std::uint64_t s_via_characters(std::uint64_t n_max, std::uint64_t a);

// Partial sum sum_{n<=x} chi(n)/n for a non-principal character.
std::complex<double> l1_truncated(const CharacterGroup& g, std::size_t chi_idx,
                                  std::uint64_t x);

// Truncated L(1,chi) for every character at once (one harmonic pass shared
// across the group).  The principal slot holds the coprime harmonic sum.
std::vector<std::complex<double>> l1_truncated_all(const CharacterGroup& g, std::uint64_t x);

// Default truncation point: a^3 capped at 1e8.
std::uint64_t l1_default_cutoff(std::uint64_t a);

// 1/phi(a) * sum_{chi != chi0} conj(chi)(-1) |L(1,chi)|^2 with the L values
// truncated at x (default a^3, capped at 1e8).  Requires a >= 3.
double char_sum_L1(std::uint64_t a, std::uint64_t x = 0);

// The paper-style elementary evaluation of the same average:
//   -(1/a) * sum_{m <= a/2, (m,a)=1} (2/m) log((a-m)/m).
double elementary_char_sum(std::uint64_t a);

}  // namespace ufmvt
