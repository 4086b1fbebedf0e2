// Command-line front end. Talks to the library exclusively through the
// C API so it doubles as a smoke test of the shared-library surface.

#include <cstdio>
#include <cstring>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfmod.h"

namespace {

struct StringDeleter {
    void operator()(char* s) const { cfmod_string_free(s); }
};
using CStr = std::unique_ptr<char, StringDeleter>;

struct CtxDeleter {
    void operator()(cfmod_ctx* c) const { cfmod_ctx_free(c); }
};
using Ctx = std::unique_ptr<cfmod_ctx, CtxDeleter>;

// 1 for domain errors, 2 for malformed input (usage)
int report_error(cfmod_status status) {
    const char* detail = cfmod_last_error();
    std::cerr << "error: "
              << (detail != nullptr && detail[0] != '\0'
                      ? detail
                      : cfmod_status_message(status))
              << "\n";
    return status == CFMOD_ERR_PARSE ? 2 : 1;
}

int print_result(cfmod_status status, const CStr& value) {
    if (status != CFMOD_OK) return report_error(status);
    std::cout << value.get() << "\n";
    return 0;
}

Ctx open_context(const std::string& a, const std::string& d, cfmod_status* status) {
    cfmod_ctx* raw = nullptr;
    *status = cfmod_ctx_new(a.c_str(), d.c_str(), &raw);
    return Ctx(raw);
}

bool split_ctx_spec(const std::string& spec, std::string* a, std::string* d) {
    const std::size_t slash = spec.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == spec.size())
        return false;
    *a = spec.substr(0, slash);
    *d = spec.substr(slash + 1);
    return true;
}

int run_cf(const std::string& a, const std::string& d) {
    cfmod_status st;
    Ctx ctx = open_context(a, d, &st);
    if (st != CFMOD_OK) return report_error(st);

    int n = 0;
    cfmod_ctx_length(ctx.get(), &n);
    std::cout << "n: " << n << "\n";

    auto sequence_line = [&](const char* label, int lo,
                             cfmod_status (*get)(const cfmod_ctx*, int, char**)) {
        std::cout << label << ":";
        for (int i = lo; i <= n; ++i) {
            char* v = nullptr;
            if (get(ctx.get(), i, &v) != CFMOD_OK) return false;
            CStr guard(v);
            std::cout << (i > lo ? "," : " ") << v;
        }
        std::cout << "\n";
        return true;
    };

    auto quotient = [](const cfmod_ctx* c, int i, char** out) {
        return cfmod_ctx_quotient(c, i, out);
    };
    auto conv_p = [](const cfmod_ctx* c, int i, char** out) {
        return cfmod_ctx_convergent(c, i, out, nullptr);
    };
    auto conv_q = [](const cfmod_ctx* c, int i, char** out) {
        return cfmod_ctx_convergent(c, i, nullptr, out);
    };

    if (!sequence_line("k", 1, quotient) || !sequence_line("p", -1, conv_p) ||
        !sequence_line("q", -1, conv_q) ||
        !sequence_line("theta", -1, cfmod_ctx_remainder) ||
        !sequence_line("eta", -1, cfmod_ctx_signed_remainder))
        return report_error(CFMOD_ERR_INDEX);

    char* g = nullptr;
    if (cfmod_ctx_gcd(ctx.get(), &g) != CFMOD_OK) return report_error(CFMOD_ERR_INVALID_ARG);
    CStr guard(g);
    std::cout << "gcd: " << g << "\n";
    return 0;
}

int run_decompose(const std::string& value, const std::string& ctx_spec,
                  const std::string& scale_name) {
    std::string a, d;
    if (!split_ctx_spec(ctx_spec, &a, &d)) {
        std::cerr << "error: --ctx expects <a>/<d>\n";
        return 2;
    }
    cfmod_status st;
    Ctx ctx = open_context(a, d, &st);
    if (st != CFMOD_OK) return report_error(st);

    const cfmod_scale scale =
        scale_name == "q" ? CFMOD_SCALE_Q : CFMOD_SCALE_THETA;
    char* digits = nullptr;
    st = cfmod_encode(ctx.get(), value.c_str(), scale, &digits);
    if (st != CFMOD_OK) return report_error(st);
    CStr digits_guard(digits);

    int valid = 0;
    st = cfmod_digits_valid(ctx.get(), digits, scale, &valid);
    if (st != CFMOD_OK) return report_error(st);

    std::cout << digits << "\n";
    std::cout << "markovian: " << (valid ? "true" : "false") << "\n";
    return 0;
}

int run_gauss_kuzmin(unsigned bits, unsigned long long samples,
                     unsigned long long seed, unsigned kmax, unsigned workers,
                     const std::string& csv) {
    std::vector<double> pmf(kmax, 0.0);
    double geo_mean = 0.0;
    const cfmod_status st = cfmod_quotient_stats(
        bits, samples, seed, kmax, workers, csv.empty() ? nullptr : csv.c_str(),
        pmf.data(), &geo_mean);
    if (st != CFMOD_OK) return report_error(st);

    std::printf("k empirical theoretical\n");
    for (unsigned k = 1; k <= kmax; ++k) {
        double theory = 0.0;
        cfmod_gauss_kuzmin_pmf(k, &theory);
        std::printf("%u %.6f %.6f\n", k, pmf[k - 1], theory);
    }
    std::printf("geometric_mean %.4f\n", geo_mean);
    return 0;
}

int run_bn1(unsigned kmax, const std::string& out_path, bool empirical,
            const std::string& n_limit, unsigned long long samples,
            unsigned long long seed, unsigned workers) {
    if (!out_path.empty()) {
        const cfmod_status st = cfmod_write_bn1_table(kmax, out_path.c_str());
        if (st != CFMOD_OK) return report_error(st);
    }
    std::vector<double> emp;
    if (empirical) {
        emp.assign(kmax + 1, 0.0);
        const cfmod_status st = cfmod_empirical_bn1(n_limit.c_str(), samples, seed,
                                                    kmax, workers, emp.data());
        if (st != CFMOD_OK) return report_error(st);
    }
    for (unsigned k = 0; k <= kmax; ++k) {
        double closed = 0.0;
        cfmod_bn1_cdf(k, &closed);
        if (empirical)
            std::printf("%u %.6f %.6f\n", k, closed, emp[k]);
        else
            std::printf("%u %.6f\n", k, closed);
    }
    return 0;
}

int run_bench(const std::vector<unsigned>& bits, unsigned long long reps,
              unsigned long long seed, bool subtractive, const std::string& csv) {
    char* table = nullptr;
    const cfmod_status st =
        cfmod_bench(bits.data(), bits.size(), reps, seed, subtractive ? 1 : 0,
                    csv.empty() ? nullptr : csv.c_str(), &table);
    if (st != CFMOD_OK) return report_error(st);
    CStr guard(table);
    std::cout << table;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modular arithmetic via continued-fraction numeration"};
    app.require_subcommand(1);
    int exit_code = 0;

    // cf <a> <d>
    std::string arg_a, arg_b, arg_d;
    CLI::App* cf = app.add_subcommand("cf", "print the expansion of a/d");
    cf->add_option("a", arg_a)->required();
    cf->add_option("d", arg_d)->required();
    cf->callback([&] { exit_code = run_cf(arg_a, arg_d); });

    // modmul <a> <b> <d>
    CLI::App* mul = app.add_subcommand("modmul", "(a*b) mod d");
    mul->add_option("a", arg_a)->required();
    mul->add_option("b", arg_b)->required();
    mul->add_option("d", arg_d)->required();
    mul->callback([&] {
        char* r = nullptr;
        const cfmod_status st =
            cfmod_modmul(arg_a.c_str(), arg_b.c_str(), arg_d.c_str(), &r);
        exit_code = print_result(st, CStr(r));
    });

    // moddiv <a> <b> <d> [--method ...] [--verbose]
    std::string method = "theorem2";
    bool verbose = false;
    CLI::App* div = app.add_subcommand("moddiv", "(a^-1 * b) mod d");
    div->add_option("a", arg_a)->required();
    div->add_option("b", arg_b)->required();
    div->add_option("d", arg_d)->required();
    div->add_option("--method", method, "division route")
        ->check(CLI::IsMember({"theorem2", "ito-t2"}));
    div->add_flag("--verbose", verbose, "note whether the final correction fired");
    div->callback([&] {
        char* r = nullptr;
        int corrected = 0;
        const cfmod_status st = cfmod_moddiv(
            arg_a.c_str(), arg_b.c_str(), arg_d.c_str(),
            method == "theorem2" ? CFMOD_DIV_THEOREM2 : CFMOD_DIV_ITO_T2,
            &corrected, &r);
        exit_code = print_result(st, CStr(r));
        if (exit_code == 0 && verbose) {
            if (method == "theorem2")
                std::cerr << "correction: " << (corrected ? "+d" : "none") << "\n";
            else
                std::cerr << "correction: " << (corrected ? "reduced mod d" : "none")
                          << "\n";
        }
    });

    // inv <a> <d>
    CLI::App* inv = app.add_subcommand("inv", "a^-1 mod d");
    inv->add_option("a", arg_a)->required();
    inv->add_option("d", arg_d)->required();
    inv->callback([&] {
        char* r = nullptr;
        const cfmod_status st = cfmod_modinv(arg_a.c_str(), arg_d.c_str(), &r);
        exit_code = print_result(st, CStr(r));
    });

    // decompose <N> --ctx a/d --scale q|theta
    std::string ctx_spec, scale_name;
    CLI::App* dec = app.add_subcommand("decompose", "digit string of N");
    dec->add_option("N", arg_a)->required();
    dec->add_option("--ctx", ctx_spec, "expansion pair <a>/<d>")->required();
    dec->add_option("--scale", scale_name, "numeration scale")
        ->required()
        ->check(CLI::IsMember({"q", "theta"}));
    dec->callback([&] { exit_code = run_decompose(arg_a, ctx_spec, scale_name); });

    // stats ...
    CLI::App* stats = app.add_subcommand("stats", "distribution checks");
    stats->require_subcommand(1);

    unsigned bits = 256, kmax_gk = 15, workers = 1;
    unsigned long long samples = 1000, seed = 1;
    std::string csv_path;
    CLI::App* gk = stats->add_subcommand(
        "gauss-kuzmin", "empirical vs theoretical partial-quotient law");
    gk->add_option("--bits", bits, "modulus size in bits");
    gk->add_option("--samples", samples, "number of random rationals");
    gk->add_option("--seed", seed, "RNG seed");
    gk->add_option("--kmax", kmax_gk, "largest tabulated quotient");
    gk->add_option("--workers", workers, "worker streams");
    gk->add_option("--csv", csv_path, "write the histogram as CSV");
    gk->callback([&] {
        exit_code = run_gauss_kuzmin(bits, samples, seed, kmax_gk, workers, csv_path);
    });

    unsigned kmax_bn1 = 49;
    std::string out_path, n_limit = "1000000";
    bool empirical = false;
    unsigned long long bn1_samples = 100000, bn1_seed = 42;
    unsigned bn1_workers = 1;
    CLI::App* bn1 = stats->add_subcommand("bn1", "law of the overflow digit");
    bn1->add_option("--kmax", kmax_bn1, "largest tabulated digit");
    bn1->add_option("--out", out_path, "write the closed-form table to a file");
    bn1->add_flag("--empirical", empirical, "add a Monte Carlo column");
    bn1->add_option("--N", n_limit, "sampling bound for a and d");
    bn1->add_option("--samples", bn1_samples, "Monte Carlo sample count");
    bn1->add_option("--seed", bn1_seed, "RNG seed");
    bn1->add_option("--workers", bn1_workers, "worker streams");
    bn1->callback([&] {
        exit_code = run_bn1(kmax_bn1, out_path, empirical, n_limit, bn1_samples,
                            bn1_seed, bn1_workers);
    });

    // bench ...
    std::vector<unsigned> bench_bits{64, 128, 256, 512, 1024};
    unsigned long long bench_reps = 1000, bench_seed = 1;
    bool subtractive = false;
    std::string bench_csv;
    CLI::App* bench = app.add_subcommand("bench", "time the operations");
    bench->add_option("--bits", bench_bits, "bit sizes")->delimiter(',');
    bench->add_option("--reps", bench_reps, "operations per timed batch");
    bench->add_option("--seed", bench_seed, "RNG seed");
    bench->add_flag("--subtractive", subtractive,
                    "compute quotients by repeated subtraction");
    bench->add_option("--csv", bench_csv, "write rows as CSV");
    bench->callback([&] {
        exit_code = run_bench(bench_bits, bench_reps, bench_seed, subtractive,
                              bench_csv);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return exit_code;
}
