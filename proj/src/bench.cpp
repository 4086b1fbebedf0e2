#include "cfmod/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

#include "cfmod/cf_context.hpp"
#include "cfmod/digit_string.hpp"
#include "cfmod/errors.hpp"
#include "cfmod/modular.hpp"
#include "cfmod/rng.hpp"

namespace cfmod::bench {

namespace {

std::uint64_t fold(std::uint64_t cs, const Int& value) {
    const std::uint64_t low = mpz_get_ui(value.get_mpz_t());
    return cs ^ (low + 0x9E3779B97F4A7C15ull + (cs << 6) + (cs >> 2));
}

struct Inputs {
    std::vector<Int> a, b, d;
};

Inputs make_inputs(unsigned bits, std::uint64_t reps, std::uint64_t seed,
                   unsigned group) {
    Rng rng = Rng::worker_stream(seed, group);
    Inputs in;
    in.a.reserve(reps);
    in.b.reserve(reps);
    in.d.reserve(reps);
    Int g;
    const Int one(1);
    for (std::uint64_t i = 0; i < reps; ++i) {
        Int d = rng.with_bits(bits);
        Int a;
        do {
            a = rng.in_range(one, Int(d - 1));
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
        } while (g != 1);
        in.b.push_back(rng.below(d));
        in.a.push_back(std::move(a));
        in.d.push_back(std::move(d));
    }
    return in;
}

// ---------------------------------------------------------------------
// Subtractive quotient engine: every floor(x / y) of the expansion and
// of the digit extraction is replaced by repeated subtraction, falling
// back to one hardware division when the quotient exceeds the threshold.
// ---------------------------------------------------------------------

struct QuotAccum {
    double log_sum = 0.0;
    std::uint64_t count = 0;
};

class SubEngine {
public:
    SubEngine(unsigned threshold, QuotAccum* expansion_stats)
        : threshold_(threshold), stats_(expansion_stats) {}

    // floor quotient/remainder; rem may alias num
    void divmod(Int& quot, Int& rem, const Int& num, const Int& den) const {
        unsigned long small = 0;
        if (&rem != &num) rem = num;
        while (rem >= den && small < threshold_) {
            rem -= den;
            ++small;
        }
        if (rem >= den) {
            Int wide;
            mpz_fdiv_qr(wide.get_mpz_t(), rem.get_mpz_t(), rem.get_mpz_t(),
                        den.get_mpz_t());
            quot = wide + small;
        } else {
            quot = small;
        }
    }

    // ceiling quotient: m <- den*quot - m, with 0 <= result < den
    void ceil_divmod(Int& quot, Int& m, const Int& den) const {
        unsigned long small = 0;
        while (sgn(m) > 0 && small < threshold_) {
            m -= den;
            ++small;
        }
        if (sgn(m) > 0) {
            Int wide;
            mpz_cdiv_q(wide.get_mpz_t(), m.get_mpz_t(), den.get_mpz_t());
            mpz_neg(m.get_mpz_t(), m.get_mpz_t());
            mpz_addmul(m.get_mpz_t(), wide.get_mpz_t(), den.get_mpz_t());
            quot = wide + small;
        } else {
            quot = small;
            mpz_neg(m.get_mpz_t(), m.get_mpz_t());
        }
    }

    struct Seqs {
        int n = 0;
        Int a, d, g;
        std::vector<Int> k;      // k[i-1] = k_i
        std::vector<Int> p;      // p[i+1] = p_i
        std::vector<Int> q;      // q[i+1] = q_i
        std::vector<Int> theta;  // theta[i+1] = theta'_i
    };

    Seqs expand(const Int& a0, const Int& d) const {
        Seqs s;
        s.a = a0 % d;
        s.d = d;
        s.theta.push_back(d);
        s.theta.push_back(s.a);
        s.p.emplace_back(1);
        s.p.emplace_back(0);
        s.q.emplace_back(0);
        s.q.emplace_back(1);
        Int quot, rem;
        while (s.theta.back() != 0) {
            const std::size_t m = s.theta.size();
            divmod(quot, rem, s.theta[m - 2], s.theta[m - 1]);
            if (stats_) {
                stats_->log_sum += log_int(quot);
                ++stats_->count;
            }
            Int next_p = s.p[m - 2];
            mpz_addmul(next_p.get_mpz_t(), quot.get_mpz_t(), s.p[m - 1].get_mpz_t());
            Int next_q = s.q[m - 2];
            mpz_addmul(next_q.get_mpz_t(), quot.get_mpz_t(), s.q[m - 1].get_mpz_t());
            s.k.push_back(quot);
            s.p.push_back(std::move(next_p));
            s.q.push_back(std::move(next_q));
            s.theta.push_back(rem);
        }
        s.n = static_cast<int>(s.k.size());
        s.g = s.theta[s.n];
        return s;
    }

    // q-scale digits of b evaluated against eta' (same result as modmul)
    Int mul(const Seqs& s, const Int& b) const {
        if (s.d == 1 || s.a == 0 || b == 0) return Int(0);
        Int tmp = b - 1;
        Int digit, acc = s.a;
        for (int i = s.n + 1; i >= 1; --i) {
            divmod(digit, tmp, tmp, s.q[static_cast<std::size_t>(i)]);
            if (sgn(digit) != 0) {
                // eta'_{i-1} = (-1)^{i-1} theta'_{i-1}
                const Int& th = s.theta[static_cast<std::size_t>(i)];
                if ((i - 1) % 2 == 0)
                    mpz_addmul(acc.get_mpz_t(), digit.get_mpz_t(), th.get_mpz_t());
                else
                    mpz_submul(acc.get_mpz_t(), digit.get_mpz_t(), th.get_mpz_t());
            }
        }
        return acc;
    }

    // theta-scale digits of b evaluated against the alternating q basis
    Int div(const Seqs& s, const Int& b) const {
        if (s.d == 1) return Int(0);
        Int rem = b;
        Int digit, c(0);
        for (int i = 1; i <= s.n; ++i) {
            divmod(digit, rem, rem, s.theta[static_cast<std::size_t>(i)]);
            if (sgn(digit) != 0) {
                const Int& q = s.q[static_cast<std::size_t>(i)];
                if ((i - 1) % 2 == 0)
                    mpz_addmul(c.get_mpz_t(), digit.get_mpz_t(), q.get_mpz_t());
                else
                    mpz_submul(c.get_mpz_t(), digit.get_mpz_t(), q.get_mpz_t());
            }
        }
        return sgn(c) < 0 ? Int(c + s.d) : c;
    }

    // ceiling-route division
    Int div_ceil(const Seqs& s, const Int& b) const {
        if (s.d == 1) return Int(0);
        Int m = b;
        Int digit, sum(0);
        for (int i = 1; i <= s.n; ++i) {
            ceil_divmod(digit, m, s.theta[static_cast<std::size_t>(i)]);
            if (sgn(digit) != 0)
                mpz_addmul(sum.get_mpz_t(), digit.get_mpz_t(),
                           s.q[static_cast<std::size_t>(i)].get_mpz_t());
        }
        return sum >= s.d ? Int(sum % s.d) : sum;
    }

private:
    unsigned threshold_;
    QuotAccum* stats_;
};

using OpFn = std::function<Int(std::uint64_t)>;

BenchRow time_op(const std::string& name, unsigned bits, std::uint64_t reps,
                 const OpFn& op) {
    using clock = std::chrono::steady_clock;
    BenchRow row;
    row.op = name;
    row.bits = bits;
    row.reps = reps;

    std::array<std::uint64_t, 5> batch_ns{};
    std::uint64_t cs = 0;
    for (int batch = -1; batch < 5; ++batch) {  // batch -1 is the warmup
        const auto start = clock::now();
        for (std::uint64_t i = 0; i < reps; ++i) cs = fold(cs, op(i));
        const auto stop = clock::now();
        if (batch >= 0)
            batch_ns[static_cast<std::size_t>(batch)] = static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
                    .count());
    }
    std::sort(batch_ns.begin(), batch_ns.end());
    row.total_ns = batch_ns[2];
    row.ns_per_op = static_cast<double>(row.total_ns) / static_cast<double>(reps);
    row.checksum = cs;
    return row;
}

BenchReport run(const BenchConfig& config, bool subtractive) {
    if (config.reps < 1) throw RangeError("need at least one repetition");
    for (unsigned bits : config.bits)
        if (bits < 16) throw RangeError("benchmark sizes start at 16 bits");

    BenchReport report;
    report.subtractive = subtractive;
    QuotAccum quots;
    SubEngine engine(config.subtract_threshold, subtractive ? &quots : nullptr);

    unsigned group = 0;
    for (unsigned bits : config.bits) {
        const Inputs in = make_inputs(bits, config.reps, config.seed, group++);
        const std::uint64_t reps = config.reps;

        std::vector<OpFn> ops;
        std::vector<std::string> names;

        names.emplace_back("naive_modmul");
        ops.emplace_back(
            [&in](std::uint64_t i) { return naive_modmul(in.a[i], in.b[i], in.d[i]); });

        if (!subtractive) {
            std::vector<ModContext> contexts;
            contexts.reserve(reps);
            for (std::uint64_t i = 0; i < reps; ++i)
                contexts.emplace_back(in.a[i], in.d[i]);

            names.emplace_back("modmul");
            ops.emplace_back(
                [&in](std::uint64_t i) { return modmul(in.a[i], in.b[i], in.d[i]); });
            names.emplace_back("ctx_build");
            ops.emplace_back([&in](std::uint64_t i) {
                ModContext mc(in.a[i], in.d[i]);
                return mc.context().convergent_den(mc.context().quotient_count() - 1);
            });
            names.emplace_back("ctx_modmul");
            ops.emplace_back([&in, contexts = std::move(contexts)](std::uint64_t i) {
                return contexts[i].mul(in.b[i]);
            });
            names.emplace_back("moddiv_theorem2");
            ops.emplace_back([&in](std::uint64_t i) {
                return moddiv_theorem2(in.a[i], in.b[i], in.d[i]);
            });
            names.emplace_back("moddiv_ito_t2");
            ops.emplace_back([&in](std::uint64_t i) {
                return moddiv_ito_t2(in.a[i], in.b[i], in.d[i]);
            });
        } else {
            std::vector<SubEngine::Seqs> contexts;
            contexts.reserve(reps);
            for (std::uint64_t i = 0; i < reps; ++i)
                contexts.push_back(engine.expand(in.a[i], in.d[i]));

            names.emplace_back("modmul");
            ops.emplace_back([&in, &engine](std::uint64_t i) {
                return engine.mul(engine.expand(in.a[i], in.d[i]), in.b[i]);
            });
            names.emplace_back("ctx_build");
            ops.emplace_back([&in, &engine](std::uint64_t i) {
                SubEngine::Seqs s = engine.expand(in.a[i], in.d[i]);
                return s.q[static_cast<std::size_t>(s.n)];
            });
            names.emplace_back("ctx_modmul");
            ops.emplace_back(
                [&in, &engine, contexts = std::move(contexts)](std::uint64_t i) {
                    return engine.mul(contexts[i], in.b[i]);
                });
            names.emplace_back("moddiv_theorem2");
            ops.emplace_back([&in, &engine](std::uint64_t i) {
                return engine.div(engine.expand(in.a[i], in.d[i]), in.b[i]);
            });
            names.emplace_back("moddiv_ito_t2");
            ops.emplace_back([&in, &engine](std::uint64_t i) {
                return engine.div_ceil(engine.expand(in.a[i], in.d[i]), in.b[i]);
            });
        }

        for (std::size_t o = 0; o < ops.size(); ++o)
            report.rows.push_back(time_op(names[o], bits, reps, ops[o]));
    }

    if (subtractive && quots.count > 0)
        report.geo_mean_quotient =
            std::exp(quots.log_sum / static_cast<double>(quots.count));
    return report;
}

}  // namespace

void BenchReport::write_csv(std::ostream& out) const {
    out << "op,bits,reps,total_ns,ns_per_op,checksum\n";
    char line[192];
    for (const BenchRow& r : rows) {
        std::snprintf(line, sizeof(line), "%s,%u,%llu,%llu,%.2f,%llu\n", r.op.c_str(),
                      r.bits, static_cast<unsigned long long>(r.reps),
                      static_cast<unsigned long long>(r.total_ns), r.ns_per_op,
                      static_cast<unsigned long long>(r.checksum));
        out << line;
    }
}

void BenchReport::write_table(std::ostream& out) const {
    char line[192];
    std::snprintf(line, sizeof(line), "%-16s %6s %8s %12s %12s %20s\n", "op", "bits",
                  "reps", "total_ns", "ns_per_op", "checksum");
    out << line;
    for (const BenchRow& r : rows) {
        std::snprintf(line, sizeof(line), "%-16s %6u %8llu %12llu %12.2f %20llu\n",
                      r.op.c_str(), r.bits, static_cast<unsigned long long>(r.reps),
                      static_cast<unsigned long long>(r.total_ns), r.ns_per_op,
                      static_cast<unsigned long long>(r.checksum));
        out << line;
    }
    if (subtractive) {
        std::snprintf(line, sizeof(line), "# geo_mean_quotient %.4f\n",
                      geo_mean_quotient);
        out << line;
    }
}

const BenchRow* BenchReport::find(const std::string& op, unsigned bits) const {
    for (const BenchRow& r : rows)
        if (r.op == op && r.bits == bits) return &r;
    return nullptr;
}

BenchReport run_bench(const BenchConfig& config) { return run(config, false); }

BenchReport run_bench_subtractive(const BenchConfig& config) {
    return run(config, true);
}

}  // namespace cfmod::bench
