#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cfmod::bench {

struct BenchRow {
    std::string op;
    unsigned bits = 0;
    std::uint64_t reps = 0;      // operations per timed batch
    std::uint64_t total_ns = 0;  // median of the five timed batches
    double ns_per_op = 0.0;      // total_ns / reps
    std::uint64_t checksum = 0;  // fold of every output the run computed
};

struct BenchReport {
    std::vector<BenchRow> rows;
    bool subtractive = false;
    // geometric mean of the partial quotients seen while expanding
    // (subtractive runs only; 0 otherwise)
    double geo_mean_quotient = 0.0;

    /// "op,bits,reps,total_ns,ns_per_op,checksum" rows.
    void write_csv(std::ostream& out) const;
    /// Same columns as an aligned human-readable table.
    void write_table(std::ostream& out) const;

    const BenchRow* find(const std::string& op, unsigned bits) const;
};

struct BenchConfig {
    std::vector<unsigned> bits{64, 128, 256, 512, 1024};
    std::uint64_t reps = 1000;
    std::uint64_t seed = 1;
    // quotient size beyond which the subtractive variant falls back to a
    // hardware division
    unsigned subtract_threshold = 16;
};

/// Times naive_modmul, modmul, context construction, context-bound
/// multiplication, and both division routes on identical seeded inputs,
/// one row per (operation, bit size). Methodology: inputs pre-generated
/// outside the timed region, one discarded warmup batch, then five timed
/// batches of `reps` operations; the reported time is the median batch.
/// Runs single-threaded.
BenchReport run_bench(const BenchConfig& config);

/// Same measurements, but every Euclidean step and digit extraction
/// computes its quotient by repeated subtraction (division fallback past
/// config.subtract_threshold). Arithmetic results are identical to
/// run_bench for the same seed, so the checksums must match.
BenchReport run_bench_subtractive(const BenchConfig& config);

}  // namespace cfmod::bench
