#include "cfmod/stats.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <thread>

#include "cfmod/cf_context.hpp"
#include "cfmod/digit_string.hpp"
#include "cfmod/errors.hpp"
#include "cfmod/rng.hpp"

namespace cfmod {

namespace {

// Apery's constant to 40 significant digits; zeta(2) is computed from pi.
constexpr long double kZeta3 = 1.202056903159594285399738161511449990765L;
const long double kZeta2 =
    std::numbers::pi_v<long double> * std::numbers::pi_v<long double> / 6.0L;

/// Splits `samples` across `workers` contiguous blocks, runs
/// `body(worker, block_size, rng)` on each with its own derived stream,
/// and merges the partial results in worker order.
template <class Accum, class Body>
Accum run_sharded(std::uint64_t samples, std::uint64_t seed, unsigned workers,
                  Body body) {
    if (workers == 0) workers = 1;
    if (workers == 1) {
        Rng rng = Rng::worker_stream(seed, 0);
        return body(0u, samples, rng);
    }
    std::vector<Accum> parts(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::uint64_t base = samples / workers;
    const std::uint64_t extra = samples % workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t block = base + (w < extra ? 1 : 0);
        threads.emplace_back([&parts, body, seed, w, block] {
            Rng rng = Rng::worker_stream(seed, w);
            parts[w] = body(w, block, rng);
        });
    }
    for (auto& t : threads) t.join();
    Accum merged = std::move(parts[0]);
    for (unsigned w = 1; w < workers; ++w) merged.merge(parts[w]);
    return merged;
}

struct Bn1Counts {
    std::vector<std::uint64_t> per_digit;  // index k, 0..kmax; last slot +1 = tail
    void merge(const Bn1Counts& other) {
        for (std::size_t i = 0; i < per_digit.size(); ++i)
            per_digit[i] += other.per_digit[i];
    }
};

}  // namespace

double gauss_kuzmin_pmf(std::uint64_t k) {
    if (k < 1) throw RangeError("partial quotients are >= 1");
    const long double kp1 = static_cast<long double>(k) + 1.0L;
    return static_cast<double>(-std::log2(1.0L - 1.0L / (kp1 * kp1)));
}

double bn1_cdf(std::uint64_t k) {
    const long double kp1 = static_cast<long double>(k) + 1.0L;
    long double sum = 0.0L;
    for (std::uint64_t i = 1; i <= k + 1; ++i) {
        const long double li = static_cast<long double>(i);
        sum += (li - kp1) / (li * li * li);
    }
    return static_cast<double>((sum + kp1 * kZeta3) / kZeta2);
}

void write_bn1_table(unsigned kmax, std::ostream& out) {
    char line[64];
    for (unsigned k = 0; k <= kmax; ++k) {
        std::snprintf(line, sizeof(line), "%u %.6f\n", k, bn1_cdf(k));
        out << line;
    }
}

void write_bn1_table(unsigned kmax, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open \"" + path + "\" for writing");
    write_bn1_table(kmax, out);
    out.flush();
    if (!out) throw Error("write to \"" + path + "\" failed");
}

Bn1Distribution closed_form_bn1(unsigned kmax) {
    Bn1Distribution dist;
    dist.kmax = kmax;
    dist.source = Bn1Source::ClosedForm;
    dist.cdf.reserve(kmax + 1);
    for (unsigned k = 0; k <= kmax; ++k) dist.cdf.push_back(bn1_cdf(k));
    return dist;
}

Bn1Distribution empirical_bn1(const Int& n_limit, std::uint64_t samples,
                              std::uint64_t seed, unsigned kmax, unsigned workers) {
    if (n_limit < 2) throw RangeError("sampling bound must be >= 2");
    if (samples < 1) throw RangeError("need at least one sample");
    if (workers == 0) workers = 1;

    auto body = [&n_limit, kmax](unsigned, std::uint64_t block, Rng& rng) {
        Bn1Counts acc{std::vector<std::uint64_t>(kmax + 2, 0)};
        const Int one(1);
        for (std::uint64_t s = 0; s < block; ++s) {
            Int a, d;
            do {
                a = rng.in_range(one, n_limit);
                d = rng.in_range(one, n_limit);
            } while (a % d == 0);
            Int b = rng.in_range(one, d);
            CfContext ctx = CfContext::expand(a, d);
            DigitString ds = ostrowski_encode(b, ctx);
            const Int& digit = ds.overflow_digit();
            if (digit > kmax)
                ++acc.per_digit[kmax + 1];
            else
                ++acc.per_digit[mpz_get_ui(digit.get_mpz_t())];
        }
        return acc;
    };
    Bn1Counts counts = run_sharded<Bn1Counts>(samples, seed, workers, body);

    Bn1Distribution dist;
    dist.kmax = kmax;
    dist.source = Bn1Source::Empirical;
    dist.n_limit = n_limit;
    dist.samples = samples;
    dist.seed = seed;
    dist.workers = workers;
    dist.cdf.reserve(kmax + 1);
    std::uint64_t running = 0;
    for (unsigned k = 0; k <= kmax; ++k) {
        running += counts.per_digit[k];
        dist.cdf.push_back(static_cast<double>(running) /
                           static_cast<double>(samples));
    }
    return dist;
}

QuotientHistogram::QuotientHistogram(unsigned kmax)
    : kmax_(kmax == 0 ? 1 : kmax), counts_(kmax_ + 1, 0) {}

void QuotientHistogram::add(const Int& quotient) {
    if (quotient < 1) throw RangeError("partial quotients are >= 1");
    if (mpz_fits_ulong_p(quotient.get_mpz_t())) {
        const unsigned long k = mpz_get_ui(quotient.get_mpz_t());
        if (k <= kmax_)
            ++counts_[k];
        else
            ++tail_;
        log_sum_ += std::log(static_cast<double>(k));
    } else {
        ++tail_;
        log_sum_ += log_int(quotient);
    }
    ++total_;
}

void QuotientHistogram::merge(const QuotientHistogram& other) {
    if (other.kmax_ != kmax_) throw RangeError("histogram shapes differ");
    for (unsigned k = 1; k <= kmax_; ++k) counts_[k] += other.counts_[k];
    tail_ += other.tail_;
    total_ += other.total_;
    log_sum_ += other.log_sum_;
}

std::uint64_t QuotientHistogram::count(unsigned k) const {
    if (k < 1 || k > kmax_) throw IndexError("histogram bucket out of range");
    return counts_[k];
}

double QuotientHistogram::frequency(unsigned k) const {
    if (total_ == 0) return 0.0;
    return static_cast<double>(count(k)) / static_cast<double>(total_);
}

double QuotientHistogram::geometric_mean() const {
    if (total_ == 0) return 0.0;
    return std::exp(log_sum_ / static_cast<double>(total_));
}

void QuotientHistogram::write_csv(std::ostream& out) const {
    out << "k,count,frequency\n";
    char line[96];
    for (unsigned k = 1; k <= kmax_; ++k) {
        std::snprintf(line, sizeof(line), "%u,%llu,%.6f\n", k,
                      static_cast<unsigned long long>(counts_[k]), frequency(k));
        out << line;
    }
    std::snprintf(line, sizeof(line), "tail,%llu,%.6f\n",
                  static_cast<unsigned long long>(tail_),
                  total_ == 0 ? 0.0
                              : static_cast<double>(tail_) / static_cast<double>(total_));
    out << line;
}

QuotientHistogram empirical_quotients(unsigned bits, std::uint64_t samples,
                                      std::uint64_t seed, unsigned kmax,
                                      unsigned workers) {
    if (bits < 8) throw RangeError("modulus size must be at least 8 bits");
    if (samples < 1) throw RangeError("need at least one sample");
    if (workers == 0) workers = 1;

    auto body = [bits, kmax](unsigned, std::uint64_t block, Rng& rng) {
        QuotientHistogram acc(kmax);
        Int g;
        const Int one(1);
        for (std::uint64_t s = 0; s < block; ++s) {
            Int a, d;
            do {
                d = rng.with_bits(bits);
                a = rng.in_range(one, Int(d - 1));
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
            } while (g != 1);
            CfContext ctx = CfContext::expand(a, d);
            for (int i = 1; i <= ctx.quotient_count(); ++i) acc.add(ctx.quotient(i));
        }
        return acc;
    };
    return run_sharded<QuotientHistogram>(samples, seed, workers, body);
}

}  // namespace cfmod
