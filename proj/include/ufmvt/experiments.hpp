// experiments.hpp -- measurement harness: error terms Delta(N;a), log-
// polynomial least squares, and error-growth exponents.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace ufmvt {

struct DeltaRecord {
    std::uint64_t n = 0;
    std::uint64_t a = 0;
    std::uint64_t s_exact = 0;
    double main_full = 0.0;   // residue main term (contour + L-values)
    double main_thm1 = 0.0;   // polynomial main term with explicit c0
    double delta_full = 0.0;  // s_exact - main_full
    double delta_norm = 0.0;  // delta_full / sqrt(N)
};

struct FitResult {
    unsigned degree = 0;
    std::vector<double> coefficients;  // highest power of log N first
    double rms_residual = 0.0;
    std::uint64_t n_min = 0, n_max = 0;
};

// One record per grid entry (grid must be ascending).  S values come from
// s_sieve; main_full uses an L(1,chi) cutoff of max(a^3, 10^7) so the
// truncation error stays well below the error term under measurement.
std::vector<DeltaRecord> delta_scan(std::uint64_t a, const std::vector<std::uint64_t>& grid);

// Least squares of value/N against {1, L, ..., L^degree}, L = log N.
// Solved in a centered basis and expanded back, long double throughout.
FitResult fit_log_poly(const std::vector<std::pair<std::uint64_t, double>>& points,
                       unsigned degree);

// Slope of log|delta_full| against log N; zero deltas are excluded.
// Requires at least 6 usable records.
double growth_exponent(const std::vector<DeltaRecord>& records);

// CSV with header N,a,S_exact,main_full,main_thm1,delta_full,delta_norm,
// reals printed with 12 significant digits.
void write_delta_csv(std::ostream& out, const std::vector<DeltaRecord>& records);
std::vector<DeltaRecord> read_delta_csv(std::istream& in);

}  // namespace ufmvt
