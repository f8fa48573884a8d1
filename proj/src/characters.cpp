#include "ufmvt/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "ufmvt/errors.hpp"

namespace ufmvt {

namespace {
using u64 = std::uint64_t;
}

CharacterValue CharacterValue::rotation(u64 k, u64 d) {
    k %= d;
    u64 g = std::gcd(k, d);
    if (k == 0) return {false, 0, 1};
    return {false, k / g, d / g};
}

std::complex<double> CharacterValue::to_complex() const {
    if (zero) return {0.0, 0.0};
    double theta = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(theta), std::sin(theta)};
}

CharacterValue CharacterValue::conj() const {
    if (zero || num == 0) return *this;
    return {false, den - num, den};
}

CharacterValue CharacterValue::operator*(const CharacterValue& o) const {
    if (zero || o.zero) return {};
    u64 d = std::lcm(den, o.den);
    u64 k = num * (d / den) + o.num * (d / o.den);
    return rotation(k, d);
}

namespace {

u64 powmod_small(u64 base, u64 exp, u64 m) {
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = r * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return r;
}

// Smallest primitive root of an odd prime power q = p^k, found by checking
// g^(phi/ell) != 1 for every prime ell | phi.
u64 primitive_root(u64 q, u64 p) {
    u64 phi = q / p * (p - 1);
    auto phi_primes = factorize(phi);
    for (u64 g = 2; ; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (const auto& pp : phi_primes.factors) {
            if (powmod_small(g, phi / pp.prime, q) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
}

}  // namespace

CharacterGroup::CharacterGroup(u64 modulus) : modulus_(modulus) {
    if (modulus == 0) throw std::invalid_argument("CharacterGroup: modulus must be positive");
    if (modulus > 1000000) throw ResourceError("CharacterGroup: modulus > 10^6");
    auto fact = factorize(modulus);
    for (const auto& pp : fact.factors) {
        u64 q = 1;
        for (std::uint32_t e = 0; e < pp.exponent; ++e) q *= pp.prime;
        if (pp.prime == 2) {
            if (pp.exponent == 1) continue;  // trivial unit group mod 2
            if (pp.exponent == 2) {
                // <3> of order 2 mod 4
                orders_.push_back(2);
                comp_moduli_.push_back(q);
                std::vector<std::uint32_t> table(q, 0);
                table[3] = 1;
                table[1] = 0;
                dlog_tables_.push_back(std::move(table));
            } else {
                // units mod 2^e = <-1> x <5>
                orders_.push_back(2);
                comp_moduli_.push_back(q);
                orders_.push_back(q / 4);
                comp_moduli_.push_back(q);
                std::vector<std::uint32_t> sign(q, 0), five(q, 0);
                u64 v = 1;
                for (u64 t = 0; t < q / 4; ++t) {
                    sign[v] = 0; five[v] = static_cast<std::uint32_t>(t);
                    sign[q - v] = 1; five[q - v] = static_cast<std::uint32_t>(t);
                    v = v * 5 % q;
                }
                dlog_tables_.push_back(std::move(sign));
                dlog_tables_.push_back(std::move(five));
            }
        } else {
            u64 phi = q / pp.prime * (pp.prime - 1);
            u64 g = primitive_root(q, pp.prime);
            orders_.push_back(phi);
            comp_moduli_.push_back(q);
            std::vector<std::uint32_t> table(q, 0);
            u64 v = 1;
            for (u64 t = 0; t < phi; ++t) {
                table[v] = static_cast<std::uint32_t>(t);
                v = v * g % q;
            }
            dlog_tables_.push_back(std::move(table));
        }
    }
    phi_ = 1;
    for (u64 d : orders_) phi_ *= d;
    // enumerate exponent tuples in mixed radix; index 0 is the principal
    char_exponents_.resize(phi_);
    for (u64 idx = 0; idx < phi_; ++idx) {
        std::vector<u64> tup(orders_.size());
        u64 t = idx;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            tup[i] = t % orders_[i];
            t /= orders_[i];
        }
        char_exponents_[idx] = std::move(tup);
    }
    dlog_neg1_ = modulus_ >= 3 ? dlog(modulus_ - 1) : std::vector<u64>(orders_.size(), 0);
}

std::vector<u64> CharacterGroup::dlog(u64 m) const {
    m %= modulus_;
    std::vector<u64> t(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        t[i] = dlog_tables_[i][m % comp_moduli_[i]];
    }
    return t;
}

CharacterValue CharacterGroup::eval(std::size_t chi_idx, u64 m) const {
    m %= modulus_;
    if (modulus_ == 1) return CharacterValue::one();
    if (std::gcd(m, modulus_) != 1) return {};
    CharacterValue v = CharacterValue::one();
    const auto& c = char_exponents_[chi_idx];
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        u64 t = dlog_tables_[i][m % comp_moduli_[i]];
        v = v * CharacterValue::rotation(c[i] * t % orders_[i], orders_[i]);
    }
    return v;
}

bool CharacterGroup::is_principal(std::size_t chi_idx) const {
    for (u64 c : char_exponents_[chi_idx]) {
        if (c != 0) return false;
    }
    return true;
}

int CharacterGroup::parity(std::size_t chi_idx) const {
    if (modulus_ <= 2) return 1;
    const auto& c = char_exponents_[chi_idx];
    // chi(-1) = exp(2 pi i sum c_i t_i / d_i) with t = dlog(-1); the value
    // is always +-1 since (-1)^2 = 1.
    u64 num2 = 0;  // accumulated fraction in halves
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        u64 term = c[i] % orders_[i] * (dlog_neg1_[i] % orders_[i]) % orders_[i];
        // term/orders_[i] must be 0 or 1/2
        num2 += 2 * term / orders_[i];
    }
    return num2 % 2 == 0 ? 1 : -1;
}

std::complex<double> CharacterGroup::a_n(std::size_t chi_idx, const Factorization& n_fact) const {
    // multiplicative: a_n = prod over p^e || n of conj(chi(p^e)) * sum_{j<=2e} chi(p)^j
    std::complex<double> result(1.0, 0.0);
    CharacterValue chi_n = CharacterValue::one();
    for (const auto& pp : n_fact.factors) {
        CharacterValue cp = eval(chi_idx, pp.prime % modulus_);
        if (cp.zero) return {0.0, 0.0};
        std::complex<double> local(0.0, 0.0);
        for (std::uint64_t j = 0; j <= 2ull * pp.exponent; ++j) {
            local += CharacterValue::rotation(cp.num * j % cp.den, cp.den).to_complex();
        }
        result *= local;
        CharacterValue cpe = CharacterValue::rotation(cp.num * pp.exponent % cp.den, cp.den);
        chi_n = chi_n * cpe;
    }
    return chi_n.conj().to_complex() * result;
}

std::uint64_t s_via_characters(u64 n_max, u64 a) {
    if (a == 0) throw std::invalid_argument("s_via_characters: a must be positive");
    if (n_max > 100000 || a > 100) throw ResourceError("s_via_characters: budget is N <= 1e5, a <= 100");
    CharacterGroup g(a);
    SpfTable spf(n_max == 0 ? 1 : n_max);
    // factor once, reuse across characters
    std::vector<Factorization> facts;
    facts.reserve(n_max);
    for (u64 n = 1; n <= n_max; ++n) facts.push_back(spf.factorize(n));
    std::complex<double> total(0.0, 0.0);
    for (std::size_t chi = 0; chi < g.size(); ++chi) {
        std::complex<double> inner(0.0, 0.0);
        for (u64 n = 1; n <= n_max; ++n) inner += g.a_n(chi, facts[n - 1]);
        total += static_cast<double>(g.parity(chi)) * inner;
    }
    total /= static_cast<double>(g.size());
    double rounded = std::round(total.real());
    if (std::abs(total.imag()) > 1e-6 || std::abs(total.real() - rounded) > 1e-6 || rounded < 0) {
        throw ConsistencyError("s_via_characters: character sum did not land on a non-negative integer");
    }
    return static_cast<u64>(rounded);
}

namespace {

// W[r] = sum_{n <= x, n = r (mod a)} 1/n, accumulated in long double.
std::vector<long double> residue_harmonic(u64 a, u64 x) {
    std::vector<long double> w(a, 0.0L);
    for (u64 n = x; n >= 1; --n) w[n % a] += 1.0L / static_cast<long double>(n);
    return w;
}

}  // namespace

u64 l1_default_cutoff(u64 a) {
    const u64 cap = 100000000;
    if (a >= 465) return cap;  // a^3 would exceed the cap
    u64 x = a * a * a;
    return x > cap ? cap : x;
}

std::complex<double> l1_truncated(const CharacterGroup& g, std::size_t chi_idx, u64 x) {
    if (g.is_principal(chi_idx)) {
        throw std::invalid_argument("l1_truncated: principal character rejected");
    }
    if (x == 0) throw std::invalid_argument("l1_truncated: x must be positive");
    u64 a = g.modulus();
    auto w = residue_harmonic(a, x);
    std::complex<long double> sum(0.0L, 0.0L);
    for (u64 r = 1; r <= a; ++r) {
        auto v = g.eval(chi_idx, r % a);
        if (v.zero) continue;
        auto c = v.to_complex();
        sum += std::complex<long double>(c.real(), c.imag()) * w[r % a];
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

std::vector<std::complex<double>> l1_truncated_all(const CharacterGroup& g, u64 x) {
    if (x == 0) throw std::invalid_argument("l1_truncated_all: x must be positive");
    u64 a = g.modulus();
    auto w = residue_harmonic(a, x);
    std::vector<std::complex<double>> out(g.size());
    for (std::size_t chi = 0; chi < g.size(); ++chi) {
        std::complex<long double> sum(0.0L, 0.0L);
        for (u64 r = 0; r < a; ++r) {
            auto v = g.eval(chi, r == 0 && a == 1 ? 1 : r);
            if (v.zero) continue;
            auto c = v.to_complex();
            sum += std::complex<long double>(c.real(), c.imag()) * w[r];
        }
        out[chi] = {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
    }
    return out;
}

double char_sum_L1(u64 a, u64 x) {
    if (a < 3) throw std::invalid_argument("char_sum_L1: a must be >= 3");
    if (a > 10000) throw ResourceError("char_sum_L1: a > 10^4");
    if (x == 0) x = l1_default_cutoff(a);
    CharacterGroup g(a);
    auto w = residue_harmonic(a, x);
    long double acc = 0.0L;
    for (std::size_t chi = 0; chi < g.size(); ++chi) {
        if (g.is_principal(chi)) continue;
        std::complex<long double> sum(0.0L, 0.0L);
        for (u64 r = 1; r < a; ++r) {
            auto v = g.eval(chi, r);
            if (v.zero) continue;
            auto c = v.to_complex();
            sum += std::complex<long double>(c.real(), c.imag()) * w[r];
        }
        acc += g.parity(chi) * std::norm(sum);
    }
    return static_cast<double>(acc / static_cast<long double>(g.size()));
}

double elementary_char_sum(u64 a) {
    if (a < 3) throw std::invalid_argument("elementary_char_sum: a must be >= 3");
    long double sum = 0.0L;
    for (u64 m = 1; 2 * m <= a; ++m) {
        if (std::gcd(m, a) != 1) continue;
        sum += 2.0L / static_cast<long double>(m)
               * std::log(static_cast<long double>(a - m) / static_cast<long double>(m));
    }
    return static_cast<double>(-sum / static_cast<long double>(a));
}

}  // namespace ufmvt
