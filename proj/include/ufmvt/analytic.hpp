// analytic.hpp -- high-precision constants, zeta evaluation, the Euler
// product constant of the cubic mean value, and the residue main terms.
//
// Every constant is computed by two independent routes with an agreement
// assertion; nothing here trusts an external reference value.

#pragma once

#include <complex>
#include <cstdint>
#include <optional>

namespace ufmvt {

// Coefficients of the quadratic-in-log(N) main term for S(N;a):
//   A * N * ((log N)^2 + c1 * log N + c0)
struct MainTermModel {
    std::uint64_t a = 1;
    double A = 0.0;           // 3/(pi^2 a) * prod_{p|a} (p-1)/(p+1)
    double c1 = 0.0;
    double c0_explicit = 0.0;
    std::optional<double> c0_fitted;
};

struct EulerProductValue {
    double value = 0.0;
    std::uint64_t truncation_prime = 0;
    double error_estimate = 0.0;
};

// Euler-Mascheroni constant, >= 12 correct digits.  Harmonic sum with
// Euler-Maclaurin tail cross-checked against the Brent-McMillan Bessel
// quotient; disagreement beyond 1e-12 raises ConsistencyError.
double euler_gamma();

// Riemann zeta by Euler-Maclaurin summation.  Requires Re s > -1 and
// |s - 1| >= 1e-3.
std::complex<double> zeta(std::complex<double> s);

double zeta_prime_at_2();            // -sum (log n)/n^2, accelerated
double zeta_prime_over_zeta_at_2();

// C = prod_p (1 - 3 p^-2 + 2 p^-3), accelerated by extracting
// zeta(2)^-3 zeta(3)^2 so the residual local factor is 1 + O(p^-4).
EulerProductValue constant_C(std::uint64_t truncation_prime = 10000);

MainTermModel main_term_coeffs(std::uint64_t a);

// F, G, H of the principal-character residue; exposed for the
// finite-difference cross-checks.
double func_F(double s);                       // ((s-1) zeta(s))^3 / (zeta(2s) s)
double func_G(double s, std::uint64_t a);      // prod_{p|a} (p^s-1)^2 / (p^s (p^s+1))
double func_H(double s, std::uint64_t a);

// Residue at s=1 of f_chi0(s) N^s / s: trapezoid rule on |s-1| = 1/4 with
// node doubling (64 vs 128 nodes must agree to 1e-8 relative), cross-checked
// against the closed quadratic N H(1) (L^2/2 + L H'/H + H''/(2H)) with the
// derivative ratios from central differences (1e-6 relative).
double residue_principal(double n_value, std::uint64_t a);

// Full residue main term of S(N;a): the principal residue plus the simple
// poles 6N/pi^2 prod(p/(p+1)) |L(1,chi)|^2 of the non-principal characters,
// all divided by phi(a).  l1_cutoff = 0 means the default a^3 truncation.
double main_term_full(double n_value, std::uint64_t a, std::uint64_t l1_cutoff = 0);

// Theorem-1-shaped polynomial main term from MainTermModel.
double main_term_thm1(double n_value, std::uint64_t a);

// (1/4) C N (log N)^3.
double main_term_theorem2(double n_value);

}  // namespace ufmvt
