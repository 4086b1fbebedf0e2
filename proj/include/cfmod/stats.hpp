#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cfmod/bigint.hpp"

namespace cfmod {

/// Gauss-Kuzmin law of partial quotients:
/// P(k_i = k) = -log2(1 - 1/(k+1)^2), for k >= 1.
double gauss_kuzmin_pmf(std::uint64_t k);

/// Closed-form limit distribution of the overflow digit for the uniform
/// model (a, d uniform in [1, N], b uniform in [1, d], N -> infinity):
/// P(b_{n+1} <= k) = zeta(2)^-1 [ sum_{i=1}^{k+1} (i-(k+1))/i^3 + (k+1) zeta(3) ].
double bn1_cdf(std::uint64_t k);

/// Writes "k cdf(k)" lines for k = 0..kmax, one pair per line, six
/// decimal digits; the plot-ready table of the closed form.
void write_bn1_table(unsigned kmax, std::ostream& out);
void write_bn1_table(unsigned kmax, const std::string& path);

enum class Bn1Source { ClosedForm, Empirical };

/// CDF table of the overflow digit b_{n+1}, either the closed form or a
/// Monte Carlo estimate.
struct Bn1Distribution {
    unsigned kmax = 0;
    std::vector<double> cdf;  // cdf[k] = P(b_{n+1} <= k), k = 0..kmax
    Bn1Source source = Bn1Source::ClosedForm;
    // sampling metadata (Empirical only)
    Int n_limit;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    unsigned workers = 0;
};

Bn1Distribution closed_form_bn1(unsigned kmax);

/// Monte Carlo estimate of the overflow-digit law: draws a, d uniform in
/// [1, N] (resampling whenever a is a multiple of d, so degenerate
/// expansions never occur) and b uniform in [1, d], expands a/d, encodes
/// b, and tallies the overflow digit floor((b-1)/q_n).
/// Deterministic for a fixed (seed, workers).
Bn1Distribution empirical_bn1(const Int& n_limit, std::uint64_t samples,
                              std::uint64_t seed, unsigned kmax = 49,
                              unsigned workers = 1);

/// Frequency table of partial quotients plus the accumulator for their
/// geometric mean.
class QuotientHistogram {
public:
    explicit QuotientHistogram(unsigned kmax = 64);

    void add(const Int& quotient);
    void merge(const QuotientHistogram& other);

    unsigned kmax() const noexcept { return kmax_; }
    std::uint64_t total() const noexcept { return total_; }
    std::uint64_t count(unsigned k) const;
    std::uint64_t tail_count() const noexcept { return tail_; }
    double frequency(unsigned k) const;
    double log_sum() const noexcept { return log_sum_; }

    /// exp(sum log k_i / total): the Khinchin statistic.
    double geometric_mean() const;

    /// "k,count,frequency" rows for k = 1..kmax plus a closing tail row.
    void write_csv(std::ostream& out) const;

private:
    unsigned kmax_;
    std::vector<std::uint64_t> counts_;  // index k, 1..kmax
    std::uint64_t tail_ = 0;
    std::uint64_t total_ = 0;
    double log_sum_ = 0.0;
};

/// Expands `samples` random rationals a/d (d uniform with exactly `bits`
/// bits, a uniform in [1, d), pairs redrawn until gcd(a, d) = 1) and
/// accumulates every partial quotient. Deterministic for a fixed
/// (seed, workers).
QuotientHistogram empirical_quotients(unsigned bits, std::uint64_t samples,
                                      std::uint64_t seed, unsigned kmax = 64,
                                      unsigned workers = 1);

}  // namespace cfmod
