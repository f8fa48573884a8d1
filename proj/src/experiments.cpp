#include "ufmvt/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ufmvt/analytic.hpp"
#include "ufmvt/characters.hpp"
#include "ufmvt/counting.hpp"
#include "ufmvt/errors.hpp"

namespace ufmvt {

namespace {
using u64 = std::uint64_t;
}

std::vector<DeltaRecord> delta_scan(u64 a, const std::vector<u64>& grid) {
    if (!std::is_sorted(grid.begin(), grid.end())) {
        throw std::invalid_argument("delta_scan: grid must be ascending");
    }
    std::vector<DeltaRecord> out;
    out.reserve(grid.size());
    // The default a^3 cutoff leaves an O(a/x) = O(a^-2) error in each
    // L(1,chi), which shows up as an O(N a^-2) bias in delta_full -- enough
    // to swamp the sqrt(N)-scale error for small a.  A floor of 10^7 keeps
    // the bias below the measurement.
    u64 l1_cutoff = std::max<u64>(l1_default_cutoff(a), 10000000);
    for (u64 n : grid) {
        DeltaRecord rec;
        rec.n = n;
        rec.a = a;
        rec.s_exact = s_sieve(n, a);
        rec.main_full = main_term_full(static_cast<double>(n), a, l1_cutoff);
        rec.main_thm1 = main_term_thm1(static_cast<double>(n), a);
        rec.delta_full = static_cast<double>(rec.s_exact) - rec.main_full;
        rec.delta_norm = rec.delta_full / std::sqrt(static_cast<double>(n));
        out.push_back(rec);
    }
    return out;
}

FitResult fit_log_poly(const std::vector<std::pair<u64, double>>& points, unsigned degree) {
    if (points.size() < degree + 2) {
        throw std::invalid_argument("fit_log_poly: need at least degree+2 points");
    }
    const std::size_t m = points.size();
    const unsigned dim = degree + 1;
    // center L to tame the Vandermonde conditioning
    std::vector<long double> logs(m), values(m);
    long double l_mean = 0.0L;
    for (std::size_t i = 0; i < m; ++i) {
        if (points[i].second <= 0.0) throw std::invalid_argument("fit_log_poly: values must be positive");
        logs[i] = std::log(static_cast<long double>(points[i].first));
        values[i] = static_cast<long double>(points[i].second) / static_cast<long double>(points[i].first);
        l_mean += logs[i];
    }
    l_mean /= static_cast<long double>(m);
    // normal equations in the centered basis t = L - l_mean
    std::vector<std::vector<long double>> ata(dim, std::vector<long double>(dim, 0.0L));
    std::vector<long double> atb(dim, 0.0L);
    for (std::size_t i = 0; i < m; ++i) {
        long double t = logs[i] - l_mean;
        std::vector<long double> row(dim);
        row[0] = 1.0L;
        for (unsigned j = 1; j < dim; ++j) row[j] = row[j - 1] * t;
        for (unsigned j = 0; j < dim; ++j) {
            for (unsigned k = 0; k < dim; ++k) ata[j][k] += row[j] * row[k];
            atb[j] += row[j] * values[i];
        }
    }
    // Gaussian elimination with partial pivoting
    for (unsigned col = 0; col < dim; ++col) {
        unsigned pivot = col;
        for (unsigned r = col + 1; r < dim; ++r) {
            if (std::abs(ata[r][col]) > std::abs(ata[pivot][col])) pivot = r;
        }
        if (ata[pivot][col] == 0.0L) throw std::runtime_error("fit_log_poly: singular system");
        std::swap(ata[col], ata[pivot]);
        std::swap(atb[col], atb[pivot]);
        for (unsigned r = col + 1; r < dim; ++r) {
            long double f = ata[r][col] / ata[col][col];
            for (unsigned k = col; k < dim; ++k) ata[r][k] -= f * ata[col][k];
            atb[r] -= f * atb[col];
        }
    }
    std::vector<long double> centered(dim);
    for (int r = static_cast<int>(dim) - 1; r >= 0; --r) {
        long double v = atb[r];
        for (unsigned k = r + 1; k < dim; ++k) v -= ata[r][k] * centered[k];
        centered[r] = v / ata[r][r];
    }
    // expand sum c_j (L - mu)^j back to powers of L
    std::vector<long double> coeffs(dim, 0.0L);  // coeffs[j] multiplies L^j
    for (unsigned j = 0; j < dim; ++j) {
        // (L - mu)^j = sum_k binom(j,k) (-mu)^{j-k} L^k
        long double binom = 1.0L;
        for (unsigned k = 0; k <= j; ++k) {
            long double pw = 1.0L;
            for (unsigned t = 0; t < j - k; ++t) pw *= -l_mean;
            coeffs[k] += centered[j] * binom * pw;
            binom = binom * static_cast<long double>(j - k) / static_cast<long double>(k + 1);
        }
    }
    FitResult fit;
    fit.degree = degree;
    fit.coefficients.resize(dim);
    for (unsigned j = 0; j < dim; ++j) {
        fit.coefficients[j] = static_cast<double>(coeffs[degree - j]);  // highest first
    }
    long double rss = 0.0L;
    for (std::size_t i = 0; i < m; ++i) {
        long double pred = 0.0L;
        for (unsigned j = 0; j < dim; ++j) pred = pred * logs[i] + coeffs[degree - j];
        long double r = values[i] - pred;
        rss += r * r;
    }
    fit.rms_residual = static_cast<double>(std::sqrt(rss / static_cast<long double>(m)));
    fit.n_min = points.front().first;
    fit.n_max = points.back().first;
    return fit;
}

double growth_exponent(const std::vector<DeltaRecord>& records) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : records) {
        if (r.delta_full == 0.0) continue;  // excluded with a note in CLI output
        pts.emplace_back(std::log(static_cast<double>(r.n)), std::log(std::abs(r.delta_full)));
    }
    if (pts.size() < 6) throw std::invalid_argument("growth_exponent: need at least 6 nonzero records");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) { sx += x; sy += y; sxx += x * x; sxy += x * y; }
    double n = static_cast<double>(pts.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void write_delta_csv(std::ostream& out, const std::vector<DeltaRecord>& records) {
    out << "N,a,S_exact,main_full,main_thm1,delta_full,delta_norm\n";
    char buf[256];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf, "%llu,%llu,%llu,%.12g,%.12g,%.12g,%.12g\n",
                      static_cast<unsigned long long>(r.n),
                      static_cast<unsigned long long>(r.a),
                      static_cast<unsigned long long>(r.s_exact),
                      r.main_full, r.main_thm1, r.delta_full, r.delta_norm);
        out << buf;
    }
}

std::vector<DeltaRecord> read_delta_csv(std::istream& in) {
    std::vector<DeltaRecord> out;
    std::string line;
    if (!std::getline(in, line)) return out;  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        DeltaRecord r;
        char comma;
        ss >> r.n >> comma >> r.a >> comma >> r.s_exact >> comma >> r.main_full >> comma
           >> r.main_thm1 >> comma >> r.delta_full >> comma >> r.delta_norm;
        if (!ss.fail()) out.push_back(r);
    }
    return out;
}

}  // namespace ufmvt
