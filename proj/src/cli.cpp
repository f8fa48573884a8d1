#include "ufmvt/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ufmvt/analytic.hpp"
#include "ufmvt/arith.hpp"
#include "ufmvt/characters.hpp"
#include "ufmvt/counting.hpp"
#include "ufmvt/errors.hpp"
#include "ufmvt/experiments.hpp"
#include "ufmvt/parallel.hpp"

namespace ufmvt {

namespace {

using u64 = std::uint64_t;

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::vector<u64> parse_grid(const std::string& spec) {
    // either a comma-separated list of N values or "pow2:LO..HI"
    std::vector<u64> grid;
    if (spec.rfind("pow2:", 0) == 0) {
        auto range = spec.substr(5);
        auto dots = range.find("..");
        if (dots == std::string::npos) throw CLI::ValidationError("--grid", "expected pow2:LO..HI");
        unsigned lo = std::stoul(range.substr(0, dots));
        unsigned hi = std::stoul(range.substr(dots + 2));
        if (lo > hi || hi > 62) throw CLI::ValidationError("--grid", "bad pow2 range");
        for (unsigned k = lo; k <= hi; ++k) grid.push_back(u64(1) << k);
        return grid;
    }
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) grid.push_back(std::stoull(tok));
    }
    if (grid.empty()) throw CLI::ValidationError("--grid", "empty grid");
    return grid;
}

void print_constants(std::ostream& out, u64 a, bool with_a) {
    auto c = constant_C();
    out << "gamma=" << fmt("%.12f", euler_gamma()) << "\n";
    out << "gamma_error=1e-12\n";
    out << "zeta_prime_2=" << fmt("%.12g", zeta_prime_at_2()) << "\n";
    out << "zeta_prime_2_error=1e-10\n";
    out << "zeta_prime_over_zeta_2=" << fmt("%.12g", zeta_prime_over_zeta_at_2()) << "\n";
    out << "zeta_prime_over_zeta_2_error=1e-10\n";
    out << "C=" << fmt("%.12g", c.value) << "\n";
    out << "C_error=" << fmt("%.3g", c.error_estimate) << "\n";
    if (with_a) {
        auto m = main_term_coeffs(a);
        out << "a=" << a << "\n";
        out << "A=" << fmt("%.12g", m.A) << "\n";
        out << "c1=" << fmt("%.12g", m.c1) << "\n";
        out << "c0_explicit=" << fmt("%.12g", m.c0_explicit) << "\n";
    }
}

int verify_characters(u64 a, std::ostream& out) {
    CharacterGroup g(a);
    if (g.size() != totient(factorize(a))) {
        throw ConsistencyError("chars: group size != phi(a)");
    }
    // orthogonality over all unit pairs: sum_chi chi(m) conj(chi(n)) must be
    // phi(a) when m = n and 0 otherwise
    for (u64 m = 1; m <= a; ++m) {
        if (std::gcd(m, a) != 1) continue;
        for (u64 n = 1; n <= a; ++n) {
            if (std::gcd(n, a) != 1) continue;
            std::complex<double> sum(0.0, 0.0);
            for (std::size_t chi = 0; chi < g.size(); ++chi) {
                sum += g.eval(chi, m).to_complex() * g.eval(chi, n).conj().to_complex();
            }
            double expect = (m % a == n % a) ? static_cast<double>(g.size()) : 0.0;
            if (std::abs(sum.real() - expect) > 1e-7 || std::abs(sum.imag()) > 1e-7) {
                throw ConsistencyError("chars: orthogonality violated");
            }
        }
    }
    // character decomposition must reproduce the direct count
    for (u64 n_max : {10ull, 100ull}) {
        if (s_via_characters(n_max, a) != s_direct(n_max, a)) {
            throw ConsistencyError("chars: s_via_characters != s_direct");
        }
    }
    out << "ok\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"binary Egyptian fraction counts, averages and main terms"};
    app.require_subcommand(1);
    unsigned threads = 0;
    bool human = false;
    app.add_option("--threads", threads, "worker count for parallel paths (0 = auto)");
    app.add_flag("--human", human, "annotated output instead of bare values");

    // count
    auto* cmd_count = app.add_subcommand("count", "R(n;a), ordered pair count");
    u64 cnt_n = 0, cnt_a = 0;
    std::string cnt_method = "divisor";
    cmd_count->add_option("--n", cnt_n, "numerator n")->required();
    cmd_count->add_option("--a", cnt_a, "parameter a")->required();
    cmd_count->add_option("--method", cnt_method, "brute|divisor")
        ->check(CLI::IsMember({"brute", "divisor"}));

    // sum
    auto* cmd_sum = app.add_subcommand("sum", "S(N;a) or T(N;a)");
    u64 sum_n = 0, sum_a = 0;
    std::string sum_method = "sieve", sum_kind = "S";
    cmd_sum->add_option("--N", sum_n, "upper limit N")->required();
    cmd_sum->add_option("--a", sum_a, "parameter a")->required();
    cmd_sum->add_option("--method", sum_method, "direct|sieve|chars")
        ->check(CLI::IsMember({"direct", "sieve", "chars"}));
    cmd_sum->add_option("--kind", sum_kind, "S|T")->check(CLI::IsMember({"S", "T"}));

    // u
    auto* cmd_u = app.add_subcommand("u", "U(N) = sum_a S(N;a)");
    u64 u_n = 0;
    cmd_u->add_option("--N", u_n, "upper limit N")->required();

    // chars
    auto* cmd_chars = app.add_subcommand("chars", "character-group checks");
    u64 chars_a = 0;
    bool chars_verify = false;
    cmd_chars->add_option("--a", chars_a, "modulus")->required();
    cmd_chars->add_flag("--verify", chars_verify, "run orthogonality and identity checks");

    // constants
    auto* cmd_constants = app.add_subcommand("constants", "verified constants as key=value lines");
    u64 const_a = 0;
    auto* const_a_opt = cmd_constants->add_option("--a", const_a, "also print A(a), c1(a), c0_explicit(a)");

    // residue
    auto* cmd_residue = app.add_subcommand("residue", "principal residue and full main term");
    u64 res_n = 0, res_a = 0;
    cmd_residue->add_option("--N", res_n, "evaluation point N")->required();
    cmd_residue->add_option("--a", res_a, "parameter a")->required();

    // scan
    auto* cmd_scan = app.add_subcommand("scan", "DeltaRecord CSV over an N grid");
    u64 scan_a = 0;
    std::string scan_grid, scan_output;
    cmd_scan->add_option("--a", scan_a, "parameter a")->required();
    cmd_scan->add_option("--grid", scan_grid, "N1,N2,... or pow2:LO..HI")->required();
    cmd_scan->add_option("--output", scan_output, "output path (default stdout)");

    // fit
    auto* cmd_fit = app.add_subcommand("fit", "log-polynomial fit of S_exact/N from a scan CSV");
    std::string fit_input;
    unsigned fit_degree = 2;
    cmd_fit->add_option("--input", fit_input, "DeltaRecord CSV path")->required();
    cmd_fit->add_option("--degree", fit_degree, "polynomial degree in log N");

    // rk
    auto* cmd_rk = app.add_subcommand("rk", "R_k(n;a), ordered k-tuple count");
    u64 rk_n = 0, rk_a = 0;
    unsigned rk_k = 3;
    cmd_rk->add_option("--n", rk_n, "numerator n")->required();
    cmd_rk->add_option("--a", rk_a, "parameter a")->required();
    cmd_rk->add_option("--k", rk_k, "number of unit fractions")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    if (threads > 0) set_worker_count(threads);

    try {
        if (*cmd_count) {
            u64 r = cnt_method == "brute" ? r_bruteforce(cnt_n, cnt_a)
                                          : r_divisor_method(cnt_n, cnt_a);
            if (human) out << "R(" << cnt_n << ";" << cnt_a << ") = ";
            out << r << "\n";
        } else if (*cmd_sum) {
            u64 v;
            if (sum_kind == "T") {
                v = t_from_s(sum_n, sum_a);
            } else if (sum_method == "direct") {
                v = s_direct(sum_n, sum_a);
            } else if (sum_method == "chars") {
                v = s_via_characters(sum_n, sum_a);
            } else {
                v = s_sieve(sum_n, sum_a);
            }
            if (human) out << sum_kind << "(" << sum_n << ";" << sum_a << ") = ";
            out << v << "\n";
        } else if (*cmd_u) {
            if (human) out << "U(" << u_n << ") = ";
            out << u_direct(u_n) << "\n";
        } else if (*cmd_chars) {
            if (chars_verify) return verify_characters(chars_a, out);
            CharacterGroup g(chars_a);
            out << "phi=" << g.size() << "\n";
        } else if (*cmd_constants) {
            print_constants(out, const_a, const_a_opt->count() > 0);
        } else if (*cmd_residue) {
            double r = residue_principal(static_cast<double>(res_n), res_a);
            double full = main_term_full(static_cast<double>(res_n), res_a);
            out << "residue_principal=" << fmt("%.12g", r) << "\n";
            out << "main_term_full=" << fmt("%.12g", full) << "\n";
        } else if (*cmd_scan) {
            auto records = delta_scan(scan_a, parse_grid(scan_grid));
            if (scan_output.empty()) {
                write_delta_csv(out, records);
            } else {
                std::ofstream f(scan_output, std::ios::binary);
                if (!f) throw std::invalid_argument("scan: cannot open output path");
                write_delta_csv(f, records);
            }
        } else if (*cmd_fit) {
            std::ifstream f(fit_input);
            if (!f) throw std::invalid_argument("fit: cannot open input path");
            auto records = read_delta_csv(f);
            std::vector<std::pair<u64, double>> pts;
            for (const auto& r : records) pts.emplace_back(r.n, static_cast<double>(r.s_exact));
            auto fit = fit_log_poly(pts, fit_degree);
            out << "degree=" << fit.degree << "\n";
            for (unsigned j = 0; j < fit.coefficients.size(); ++j) {
                out << "coeff_L" << (fit.degree - j) << "=" << fmt("%.12g", fit.coefficients[j]) << "\n";
            }
            out << "rms_residual=" << fmt("%.12g", fit.rms_residual) << "\n";
            out << "window=" << fit.n_min << ".." << fit.n_max << "\n";
        } else if (*cmd_rk) {
            if (human) out << "R_" << rk_k << "(" << rk_n << ";" << rk_a << ") = ";
            out << r_k_bruteforce(rk_n, rk_a, rk_k) << "\n";
        }
    } catch (const ResourceError& e) {
        err << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace ufmvt
