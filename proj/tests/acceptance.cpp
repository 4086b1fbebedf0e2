// Acceptance suite. Each release criterion runs at its stated scale and
// tolerance and prints exactly one [PASS]/[FAIL] line; the process exits
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cfmod/bench.hpp"
#include "cfmod/cf_context.hpp"
#include "cfmod/digit_string.hpp"
#include "cfmod/modular.hpp"
#include "cfmod/rng.hpp"
#include "cfmod/stats.hpp"
#include "support.hpp"

using cfmod::CfContext;
using cfmod::DigitString;
using cfmod::Int;

namespace {

int g_failures = 0;

class Criterion {
public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)),
          start_(std::chrono::steady_clock::now()) {}

    void fail(const std::string& detail) {
        ok_ = false;
        if (detail_.empty()) detail_ = detail;
    }

    void note(const std::string& summary) { summary_ = summary; }

    ~Criterion() {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                .count();
        if (ok_) {
            std::printf("[PASS] criterion %d: %s — %s [%.1fs]\n", number_,
                        title_.c_str(), summary_.c_str(), secs);
        } else {
            std::printf("[FAIL] criterion %d: %s — %s [%.1fs]\n", number_,
                        title_.c_str(), detail_.c_str(), secs);
            ++g_failures;
        }
        std::fflush(stdout);
    }

private:
    int number_;
    std::string title_;
    std::string summary_ = "ok";
    std::string detail_;
    bool ok_ = true;
    std::chrono::steady_clock::time_point start_;
};

std::string triple(long a, long b, long d) {
    return "(a=" + std::to_string(a) + ", b=" + std::to_string(b) +
           ", d=" + std::to_string(d) + ")";
}

void criterion1_multiplication_oracle() {
    Criterion c(1, "basis-change multiplication equals the schoolbook baseline");
    std::uint64_t cases = 0;
    for (long d = 1; d <= 200; ++d)
        for (long a = 0; a < d; ++a) {
            const cfmod::ModContext mc(a, d);
            for (long b = 0; b < d; ++b) {
                ++cases;
                if (cfmod::modmul(a, b, d) != cfmod::naive_modmul(a, b, d)) {
                    c.fail("mismatch at " + triple(a, b, d));
                    return;
                }
                if (mc.mul(b) != cfmod::naive_modmul(a, b, d)) {
                    c.fail("context mismatch at " + triple(a, b, d));
                    return;
                }
            }
        }
    std::uint64_t random_cases = 0;
    for (unsigned bits : {64u, 256u, 1024u}) {
        cfmod::Rng rng(1000 + bits);
        for (int t = 0; t < 10000; ++t) {
            const Int d = rng.with_bits(bits);
            const Int a = rng.below(d);
            const Int b = rng.below(d);
            ++random_cases;
            if (cfmod::modmul(a, b, d) != cfmod::naive_modmul(a, b, d)) {
                c.fail("mismatch at random " + std::to_string(bits) + "-bit triple");
                return;
            }
        }
    }
    c.note(std::to_string(cases) + " exhaustive cases (d <= 200, one-shot and "
           "context-bound) + " + std::to_string(random_cases) +
           " random 64/256/1024-bit triples, zero mismatches");
}

void criterion2_division_oracle() {
    Criterion c(2, "theta-route division inverts multiplication with the "
                   "raw sum inside (-d, d)");
    std::uint64_t cases = 0;
    Int inv;
    for (long d = 1; d <= 200; ++d)
        for (long a = 0; a < d; ++a) {
            const Int ad(a), dd(d);
            if (mpz_invert(inv.get_mpz_t(), ad.get_mpz_t(), dd.get_mpz_t()) == 0)
                continue;
            for (long b = 0; b < d; ++b) {
                ++cases;
                const cfmod::DivOutcome out = cfmod::moddiv_theorem2_detail(a, b, d);
                if (out.raw_sum <= -d || out.raw_sum >= d) {
                    c.fail("raw sum escaped (-d, d) at " + triple(a, b, d));
                    return;
                }
                if (out.adjusted != (out.raw_sum < 0)) {
                    c.fail("correction fired incorrectly at " + triple(a, b, d));
                    return;
                }
                if (cfmod::naive_modmul(a, out.value, d) != Int(b % d) ||
                    out.value != cfmod::naive_modmul(inv, b, d)) {
                    c.fail("wrong quotient at " + triple(a, b, d));
                    return;
                }
            }
        }
    c.note(std::to_string(cases) +
           " exhaustive cases (d <= 200, all invertible a, all b), zero failures");
}

void criterion3_ceiling_route_never_corrects() {
    Criterion c(3, "ceiling-route division returns the reduced result directly");
    std::uint64_t cases = 0;
    Int inv;
    for (long d = 1; d <= 200; ++d)
        for (long a = 0; a < d; ++a) {
            const Int ad(a), dd(d);
            if (mpz_invert(inv.get_mpz_t(), ad.get_mpz_t(), dd.get_mpz_t()) == 0)
                continue;
            for (long b = 0; b < d; ++b) {
                ++cases;
                const cfmod::DivOutcome out = cfmod::moddiv_ito_t2_detail(a, b, d);
                if (out.value != cfmod::naive_modmul(inv, b, d)) {
                    c.fail("wrong quotient at " + triple(a, b, d));
                    return;
                }
                if (out.adjusted || out.raw_sum != out.value) {
                    c.fail("raw sum left [0, d) at " + triple(a, b, d));
                    return;
                }
            }
        }
    c.note(std::to_string(cases) +
           " exhaustive cases (d <= 200): raw sum already reduced in 100%");
}

void criterion4_closed_form_anchors() {
    Criterion c(4, "closed-form overflow-digit law hits its anchors");
    const double at3 = cfmod::bn1_cdf(3);
    if (at3 < 0.9245 || at3 > 0.9250)
        c.fail("cdf(3) = " + std::to_string(at3) + " outside [0.9245, 0.9250]");
    const double at0 = cfmod::bn1_cdf(0);
    if (std::abs(at0 - 0.7308) > 1e-4)
        c.fail("cdf(0) = " + std::to_string(at0) + " not ~0.7308");
    double prev = 0.0;
    for (unsigned k = 0; k <= 49; ++k) {
        const double v = cfmod::bn1_cdf(k);
        if (v < prev) c.fail("cdf not monotone at k=" + std::to_string(k));
        if (v < 0.70 || v >= 1.0)
            c.fail("cdf(" + std::to_string(k) + ") left the plotted band");
        prev = v;
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "cdf(3) = %.6f, cdf(0) = %.6f, monotone over k = 0..49 within "
                  "[0.70, 1.0)",
                  at3, at0);
    c.note(buf);
}

void criterion5_monte_carlo_matches_closed_form() {
    Criterion c(5, "Monte Carlo overflow digits match the closed form within 0.01");
    const cfmod::Bn1Distribution dist =
        cfmod::empirical_bn1(Int(1000000), 100000, 42, 10, 1);
    double worst = 0.0;
    for (unsigned k : {0u, 1u, 2u, 3u, 5u, 10u}) {
        const double diff = std::abs(dist.cdf[k] - cfmod::bn1_cdf(k));
        worst = std::max(worst, diff);
        if (diff > 0.01)
            c.fail("deviation " + std::to_string(diff) + " at k=" + std::to_string(k));
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "N=10^6, 10^5 samples, seed 42: max |empirical-closed| = %.4f",
                  worst);
    c.note(buf);
}

void criterion6_quotient_law() {
    Criterion c(6, "sampled partial quotients follow the Gauss-Kuzmin law");
    const cfmod::QuotientHistogram hist = cfmod::empirical_quotients(256, 1000, 7, 64);
    const double p1 = hist.frequency(1);
    const double geo = hist.geometric_mean();
    if (std::abs(p1 - 0.415037) > 0.02)
        c.fail("P(k=1) = " + std::to_string(p1) + " off by more than 0.02");
    if (geo < 2.60 || geo > 2.77)
        c.fail("geometric mean " + std::to_string(geo) + " outside [2.60, 2.77]");
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "10^3 256-bit rationals: P(k=1) = %.4f, geometric mean = %.3f",
                  p1, geo);
    c.note(buf);
}

void criterion7_numeration_round_trips() {
    Criterion c(7, "numeration round-trips and uniqueness of valid digit strings");
    std::uint64_t q_trips = 0, theta_trips = 0, unique_ctxs = 0;
    for (long d = 2; d <= 500; ++d)
        for (long a = 1; a < d; ++a) {
            const CfContext ctx = CfContext::expand(a, d);
            const Int qn = ctx.convergent_den(ctx.quotient_count());
            for (Int n = 1; n < 2 * qn; ++n) {
                ++q_trips;
                const DigitString ds = cfmod::ostrowski_encode(n, ctx);
                if (cfmod::decode(ds, ctx) != n || !cfmod::validate_markovian(ds, ctx)) {
                    c.fail("q-scale round trip failed for N=" + n.get_str() + " at (" +
                           std::to_string(a) + ", " + std::to_string(d) + ")");
                    return;
                }
            }
            if (ctx.gcd() == 1) {
                for (long b = 0; b < d; ++b) {
                    ++theta_trips;
                    const DigitString ds = cfmod::theta_encode(b, ctx);
                    if (cfmod::decode(ds, ctx) != b ||
                        !cfmod::validate_markovian(ds, ctx)) {
                        c.fail("theta-scale round trip failed at (" + std::to_string(a) +
                               ", " + std::to_string(d) + "), b=" + std::to_string(b));
                        return;
                    }
                }
            }
            std::string err;
            ++unique_ctxs;
            if (!testsupport::unique_cover(ctx, &err)) {
                c.fail("uniqueness broken at (" + std::to_string(a) + ", " +
                       std::to_string(d) + "): " + err);
                return;
            }
        }
    // uniqueness brute force up to the q_n <= 2000 bound
    for (long d : {1997L, 2000L})
        for (long a = 1; a < d; ++a) {
            const CfContext ctx = CfContext::expand(a, d);
            std::string err;
            ++unique_ctxs;
            if (!testsupport::unique_cover(ctx, &err)) {
                c.fail("uniqueness broken at (" + std::to_string(a) + ", " +
                       std::to_string(d) + "): " + err);
                return;
            }
        }
    c.note(std::to_string(q_trips) + " q-scale + " + std::to_string(theta_trips) +
           " theta-scale round trips (d <= 500), uniqueness enumerated over " +
           std::to_string(unique_ctxs) + " contexts with q_n <= 2000");
}

void criterion8_structural_invariants() {
    Criterion c(8, "expansion invariants hold exhaustively and at random");
    std::uint64_t checked = 0;
    for (long d = 2; d <= 10000; ++d)
        for (long a = 1; a < d; ++a) {
            ++checked;
            const std::string err =
                testsupport::check_invariants(CfContext::expand(a, d));
            if (!err.empty()) {
                c.fail(err);
                return;
            }
        }
    cfmod::Rng rng(8);
    for (int t = 0; t < 1000; ++t) {
        const Int d = rng.with_bits(256);
        const Int a = rng.in_range(1, Int(d - 1));
        ++checked;
        const std::string err = testsupport::check_invariants(CfContext::expand(a, d));
        if (!err.empty()) {
            c.fail(err);
            return;
        }
    }
    c.note(std::to_string(checked) +
           " contexts (all 1 <= a < d <= 10^4 plus 10^3 random 256-bit pairs)");
}

void criterion9_complexity_envelope() {
    Criterion c(9, "quadratic growth envelope and subtractive equivalence");
    cfmod::bench::BenchConfig config;
    config.bits = {256, 512, 1024};
    config.reps = 64;
    config.seed = 1;
    const cfmod::bench::BenchReport division = cfmod::bench::run_bench(config);
    const cfmod::bench::BenchReport subtractive =
        cfmod::bench::run_bench_subtractive(config);

    const double t256 = division.find("modmul", 256)->ns_per_op;
    const double t512 = division.find("modmul", 512)->ns_per_op;
    const double t1024 = division.find("modmul", 1024)->ns_per_op;
    const double f1 = t512 / t256;
    const double f2 = t1024 / t512;
    if (f1 > 5.0)
        c.fail("256 -> 512 factor " + std::to_string(f1) + " exceeds 5");
    if (f2 > 5.0)
        c.fail("512 -> 1024 factor " + std::to_string(f2) + " exceeds 5");

    for (const auto& row : division.rows) {
        const auto* twin = subtractive.find(row.op, row.bits);
        if (twin == nullptr || twin->checksum != row.checksum) {
            c.fail("subtractive checksum diverged for " + row.op + " at " +
                   std::to_string(row.bits) + " bits");
            break;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "modmul ns/op %.0f -> %.0f -> %.0f (factors %.2f, %.2f <= 5); "
                  "all %zu subtractive checksums identical",
                  t256, t512, t1024, f1, f2, division.rows.size());
    c.note(buf);
}

}  // namespace

int main() {
    criterion1_multiplication_oracle();
    criterion2_division_oracle();
    criterion3_ceiling_route_never_corrects();
    criterion4_closed_form_anchors();
    criterion5_monte_carlo_matches_closed_form();
    criterion6_quotient_law();
    criterion7_numeration_round_trips();
    criterion8_structural_invariants();
    criterion9_complexity_envelope();

    if (g_failures == 0) {
        std::printf("all 9 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
}
