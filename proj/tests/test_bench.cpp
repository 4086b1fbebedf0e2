#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "cfmod/bench.hpp"
#include "cfmod/errors.hpp"

using cfmod::bench::BenchConfig;
using cfmod::bench::BenchReport;
using cfmod::bench::BenchRow;

namespace {

BenchConfig small_config() {
    BenchConfig config;
    config.bits = {64, 128};
    config.reps = 25;
    config.seed = 1;
    return config;
}

}  // namespace

TEST_CASE("report structure") {
    const BenchReport report = cfmod::bench::run_bench(small_config());
    CHECK(report.rows.size() == 12);  // 6 operations x 2 bit sizes
    std::set<std::string> ops;
    for (const BenchRow& r : report.rows) {
        ops.insert(r.op);
        CHECK(r.reps == 25);
        CHECK(r.ns_per_op ==
              doctest::Approx(static_cast<double>(r.total_ns) / 25.0));
    }
    CHECK(ops == std::set<std::string>{"naive_modmul", "modmul", "ctx_build",
                                       "ctx_modmul", "moddiv_theorem2",
                                       "moddiv_ito_t2"});
    CHECK(report.find("modmul", 64) != nullptr);
    CHECK(report.find("modmul", 32) == nullptr);
}

TEST_CASE("checksums are deterministic") {
    const BenchReport one = cfmod::bench::run_bench(small_config());
    const BenchReport two = cfmod::bench::run_bench(small_config());
    REQUIRE(one.rows.size() == two.rows.size());
    for (std::size_t i = 0; i < one.rows.size(); ++i) {
        CHECK(one.rows[i].op == two.rows[i].op);
        CHECK(one.rows[i].checksum == two.rows[i].checksum);
    }
}

TEST_CASE("subtractive quotients change nothing but the time") {
    const BenchReport division = cfmod::bench::run_bench(small_config());
    const BenchReport subtractive = cfmod::bench::run_bench_subtractive(small_config());
    REQUIRE(division.rows.size() == subtractive.rows.size());
    for (std::size_t i = 0; i < division.rows.size(); ++i) {
        CHECK(division.rows[i].op == subtractive.rows[i].op);
        CHECK(division.rows[i].bits == subtractive.rows[i].bits);
        CHECK(division.rows[i].checksum == subtractive.rows[i].checksum);
    }
    CHECK_FALSE(division.subtractive);
    CHECK(subtractive.subtractive);
}

TEST_CASE("subtractive runs log the mean quotient") {
    BenchConfig config;
    config.bits = {256};
    config.reps = 20;
    config.seed = 3;
    const BenchReport report = cfmod::bench::run_bench_subtractive(config);
    CHECK(report.geo_mean_quotient > 2.0);
    CHECK(report.geo_mean_quotient < 3.5);
}

TEST_CASE("precomputed contexts amortize the expansion") {
    BenchConfig config;
    config.bits = {256};
    config.reps = 150;
    config.seed = 5;
    const BenchReport report = cfmod::bench::run_bench(config);
    const BenchRow* one_shot = report.find("modmul", 256);
    const BenchRow* amortized = report.find("ctx_modmul", 256);
    REQUIRE(one_shot != nullptr);
    REQUIRE(amortized != nullptr);
    CHECK(amortized->ns_per_op < one_shot->ns_per_op);
}

TEST_CASE("csv rendering") {
    BenchConfig config;
    config.bits = {64};
    config.reps = 5;
    const BenchReport report = cfmod::bench::run_bench(config);
    std::ostringstream csv;
    report.write_csv(csv);
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "op,bits,reps,total_ns,ns_per_op,checksum");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(line.find(",64,5,") != std::string::npos);
    }
    CHECK(rows == 6);
}

TEST_CASE("configuration guards") {
    BenchConfig config;
    config.bits = {8};
    CHECK_THROWS_AS(cfmod::bench::run_bench(config), cfmod::RangeError);
    config.bits = {64};
    config.reps = 0;
    CHECK_THROWS_AS(cfmod::bench::run_bench(config), cfmod::RangeError);
}
