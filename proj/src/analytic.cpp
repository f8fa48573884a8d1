#include "ufmvt/analytic.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "ufmvt/arith.hpp"
#include "ufmvt/characters.hpp"
#include "ufmvt/errors.hpp"

namespace ufmvt {

namespace {

using u64 = std::uint64_t;
using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;

// B_2, B_4, ..., B_14
constexpr double kBernoulli[] = {
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6,
};

double gamma_harmonic(u64 n) {
    long double h = 0.0L;
    for (u64 k = n; k >= 1; --k) h += 1.0L / static_cast<long double>(k);
    long double x = static_cast<long double>(n);
    long double g = h - std::log(x) - 1.0L / (2.0L * x);
    // Euler-Maclaurin tail: + B2/(2 n^2) + B4/(4 n^4) + B6/(6 n^6)
    long double x2 = x * x;
    g += 1.0L / (12.0L * x2) - 1.0L / (120.0L * x2 * x2) + 1.0L / (252.0L * x2 * x2 * x2);
    return static_cast<double>(g);
}

// Brent-McMillan Bessel quotient: gamma = S/I - log n + O(e^{-4n}).
double gamma_bessel(unsigned n) {
    long double term = 1.0L;  // (n^k / k!)^2 at k = 0
    long double harmonic = 0.0L;
    long double s = 0.0L, i = 1.0L;
    for (unsigned k = 1; k < 400; ++k) {
        long double f = static_cast<long double>(n) / k;
        term *= f * f;
        harmonic += 1.0L / k;
        s += term * harmonic;
        i += term;
        if (term < 1e-25L * i) break;
    }
    return static_cast<double>(s / i - std::log(static_cast<long double>(n)));
}

}  // namespace

double euler_gamma() {
    static const double value = [] {
        double a = gamma_harmonic(20000);
        double b = gamma_bessel(16);
        if (std::abs(a - b) > 1e-12) {
            throw ConsistencyError("euler_gamma: harmonic and Bessel methods disagree");
        }
        return a;
    }();
    return value;
}

std::complex<double> zeta(cplx s) {
    if (s.real() <= -1.0) throw std::domain_error("zeta: Re s must exceed -1");
    if (std::abs(s - cplx(1.0, 0.0)) < 1e-3) throw std::domain_error("zeta: too close to the pole at s=1");
    const int m = 32;
    cplx sum(0.0, 0.0);
    for (int n = 1; n < m; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
    double logm = std::log(static_cast<double>(m));
    cplx m_to_minus_s = std::exp(-s * logm);
    sum += m_to_minus_s * static_cast<double>(m) / (s - 1.0);  // M^{1-s}/(s-1)
    sum += m_to_minus_s * 0.5;
    // Bernoulli corrections: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * M^{-s-2j+1}
    cplx rising = s;                       // s(s+1)...(s+2j-2)
    double fact = 2.0;                     // (2j)!
    cplx mpow = m_to_minus_s / static_cast<double>(m);  // M^{-s-2j+1}
    for (int j = 1; j <= 7; ++j) {
        if (j > 1) {
            rising *= (s + cplx(2.0 * j - 3.0)) * (s + cplx(2.0 * j - 2.0));
            fact *= (2.0 * j) * (2.0 * j - 1.0);
            mpow /= static_cast<double>(m) * m;
        }
        sum += kBernoulli[j - 1] / fact * rising * mpow;
    }
    return sum;
}

double zeta_prime_at_2() {
    static const double value = [] {
        auto eval = [](u64 m) {
            long double sum = 0.0L;
            for (u64 n = m - 1; n >= 2; --n) {
                long double x = static_cast<long double>(n);
                sum += std::log(x) / (x * x);
            }
            long double x = static_cast<long double>(m);
            long double lx = std::log(x);
            sum += (lx + 1.0L) / x;                       // integral tail
            sum += lx / (x * x) / 2.0L;                   // f(M)/2
            sum -= (1.0L - 2.0L * lx) / (x * x * x) / 12.0L;   // -f'(M)/12
            sum += (26.0L - 24.0L * lx) / (x * x * x * x * x) / 720.0L;  // +f'''(M)/720
            return static_cast<double>(-sum);
        };
        double a = eval(10000), b = eval(20000);
        if (std::abs(a - b) > 1e-10) {
            throw ConsistencyError("zeta_prime_at_2: cutoffs disagree");
        }
        return a;
    }();
    return value;
}

double zeta_prime_over_zeta_at_2() {
    double r = zeta_prime_at_2() / (kPi * kPi / 6.0);
    if (r <= -0.58 || r >= -0.56) {
        throw ConsistencyError("zeta_prime_over_zeta_at_2: outside sanity band");
    }
    return r;
}

namespace {

std::vector<std::uint32_t> primes_up_to(u64 limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> primes;
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

}  // namespace

EulerProductValue constant_C(u64 truncation_prime) {
    // 1 - 3x^2 + 2x^3 = (1-x^2)^3 (1-x^3)^-2 * E'(x) with log E' = O(x^4),
    // so C = zeta(2)^-3 zeta(3)^2 prod_p E'(1/p) converges like P^-3.
    double z2 = kPi * kPi / 6.0;
    double z3 = zeta(cplx(3.0, 0.0)).real();
    long double residual = 1.0L;
    for (u64 p : primes_up_to(truncation_prime)) {
        long double x = 1.0L / static_cast<long double>(p);
        long double x2 = x * x, x3 = x2 * x;
        long double local = (1.0L - 3.0L * x2 + 2.0L * x3) * (1.0L - x3) * (1.0L - x3)
                            / ((1.0L - x2) * (1.0L - x2) * (1.0L - x2));
        residual *= local;
    }
    EulerProductValue out;
    out.truncation_prime = truncation_prime;
    out.value = static_cast<double>(residual) * z3 * z3 / (z2 * z2 * z2);
    double p = static_cast<double>(truncation_prime);
    out.error_estimate = out.value * 3.0 / (p * p * p);  // sum of |log local| past P
    return out;
}

MainTermModel main_term_coeffs(u64 a) {
    if (a == 0) throw std::invalid_argument("main_term_coeffs: a must be positive");
    MainTermModel m;
    m.a = a;
    auto fact = factorize(a);
    double prod = 1.0, c1_extra = 0.0, c0_sum = 0.0;
    for (const auto& pp : fact.factors) {
        double p = static_cast<double>(pp.prime);
        prod *= (p - 1.0) / (p + 1.0);
        // 2 G'(1)/G(1); differentiating (p^s-1)^2/(p^s(p^s+1)) gives the
        // denominator p^2-1, not (p-1)^2
        c1_extra += (6.0 * p + 2.0) * std::log(p) / (p * p - 1.0);
        c0_sum += std::log(p) / (p - 1.0);
    }
    m.A = 3.0 / (kPi * kPi * static_cast<double>(a)) * prod;
    m.c1 = 6.0 * euler_gamma() - 4.0 * zeta_prime_over_zeta_at_2() - 2.0 + c1_extra;
    double la = std::log(static_cast<double>(a));
    m.c0_explicit = -la * la + la * c0_sum;
    return m;
}

double func_F(double s) {
    cplx z = zeta(cplx(s, 0.0));
    cplx z2 = zeta(cplx(2.0 * s, 0.0));
    double sm1 = s - 1.0;
    return sm1 * sm1 * sm1 * std::pow(z.real(), 3) / (z2.real() * s);
}

double func_G(double s, u64 a) {
    double g = 1.0;
    for (const auto& pp : factorize(a).factors) {
        double ps = std::pow(static_cast<double>(pp.prime), s);
        g *= (ps - 1.0) * (ps - 1.0) / (ps * (ps + 1.0));
    }
    return g;
}

double func_H(double s, u64 a) { return func_F(s) * func_G(s, a); }

namespace {

// H(1) in closed form: F(1) = 6/pi^2, G(1) = prod (p-1)^2/(p(p+1)).
double h_at_1(u64 a) {
    double g = 1.0;
    for (const auto& pp : factorize(a).factors) {
        double p = static_cast<double>(pp.prime);
        g *= (p - 1.0) * (p - 1.0) / (p * (p + 1.0));
    }
    return 6.0 / (kPi * kPi) * g;
}

cplx f_chi0(cplx s, const std::vector<u64>& prime_divisors) {
    cplx z = zeta(s);
    cplx num = z * z * z / zeta(2.0 * s);
    for (u64 p : prime_divisors) {
        cplx ps = std::exp(s * std::log(static_cast<double>(p)));
        num *= (ps - 1.0) * (ps - 1.0) / (ps * (ps + 1.0));
    }
    return num;
}

double residue_contour(double n_value, const std::vector<u64>& prime_divisors, int nodes) {
    const double radius = 0.25;
    cplx acc(0.0, 0.0);
    double logn = std::log(n_value);
    for (int j = 0; j < nodes; ++j) {
        double theta = 2.0 * kPi * j / nodes;
        cplx offset = std::polar(radius, theta);
        cplx s = 1.0 + offset;
        acc += f_chi0(s, prime_divisors) * std::exp(s * logn) / s * offset;
    }
    return (acc / static_cast<double>(nodes)).real();
}

// Richardson-extrapolated central differences of H at s=1.
void h_derivative_ratios(u64 a, double& d1_over_h, double& d2_over_h) {
    auto h = [a](double s) { return func_H(s, a); };
    double h1 = h_at_1(a);
    auto first = [&](double step) { return (h(1.0 + step) - h(1.0 - step)) / (2.0 * step); };
    auto second = [&](double step) {
        return (h(1.0 + step) - 2.0 * h1 + h(1.0 - step)) / (step * step);
    };
    double step = 0.02;
    double d1 = (4.0 * first(step / 2) - first(step)) / 3.0;
    double d2 = (4.0 * second(step / 2) - second(step)) / 3.0;
    d1_over_h = d1 / h1;
    d2_over_h = d2 / h1;
}

}  // namespace

double residue_principal(double n_value, u64 a) {
    if (n_value < 2.0) throw std::invalid_argument("residue_principal: N must be >= 2");
    if (a == 0 || a > 1000000) throw std::invalid_argument("residue_principal: a out of range");
    std::vector<u64> prime_divisors;
    for (const auto& pp : factorize(a).factors) prime_divisors.push_back(pp.prime);
    double r64 = residue_contour(n_value, prime_divisors, 64);
    double r128 = residue_contour(n_value, prime_divisors, 128);
    if (std::abs(r64 - r128) > 1e-8 * std::abs(r128)) {
        throw ConsistencyError("residue_principal: node doubling did not converge");
    }
    // closed quadratic cross-check
    double d1, d2;
    h_derivative_ratios(a, d1, d2);
    double logn = std::log(n_value);
    double closed = n_value * h_at_1(a) * (0.5 * logn * logn + logn * d1 + 0.5 * d2);
    if (std::abs(closed - r128) > 1e-6 * std::abs(r128)) {
        throw ConsistencyError("residue_principal: contour and closed form disagree");
    }
    return r128;
}

double main_term_full(double n_value, u64 a, u64 l1_cutoff) {
    if (a == 0) throw std::invalid_argument("main_term_full: a must be positive");
    if (a > 10000) throw ResourceError("main_term_full: a > 10^4");
    double principal = residue_principal(n_value, a);
    auto fact = factorize(a);
    u64 phi = totient(fact);
    if (phi == 1) return principal;
    if (l1_cutoff == 0) l1_cutoff = l1_default_cutoff(a);
    CharacterGroup g(a);
    auto l1 = l1_truncated_all(g, l1_cutoff);
    double prod = 1.0;
    for (const auto& pp : fact.factors) {
        double p = static_cast<double>(pp.prime);
        prod *= p / (p + 1.0);
    }
    double nonprincipal = 0.0;
    for (std::size_t chi = 0; chi < g.size(); ++chi) {
        if (g.is_principal(chi)) continue;
        nonprincipal += g.parity(chi) * std::norm(l1[chi]);
    }
    nonprincipal *= 6.0 * n_value / (kPi * kPi) * prod;
    return (principal + nonprincipal) / static_cast<double>(phi);
}

double main_term_thm1(double n_value, u64 a) {
    MainTermModel m = main_term_coeffs(a);
    double logn = std::log(n_value);
    return m.A * n_value * (logn * logn + m.c1 * logn + m.c0_explicit);
}

double main_term_theorem2(double n_value) {
    if (n_value < 2.0) throw std::invalid_argument("main_term_theorem2: N must be >= 2");
    static const double c = constant_C().value;
    double logn = std::log(n_value);
    return 0.25 * c * n_value * logn * logn * logn;
}

}  // namespace ufmvt
