#include "cfmod.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "cfmod/bench.hpp"
#include "cfmod/bigint.hpp"
#include "cfmod/errors.hpp"
#include "cfmod/modular.hpp"
#include "cfmod/stats.hpp"

using cfmod::Int;

extern "C" struct cfmod_ctx {
    cfmod::ModContext mc;
};

namespace {

thread_local std::string t_last_error;

cfmod_status fail(cfmod_status status, const std::string& detail) {
    t_last_error = detail;
    return status;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cfmod_status store(char** out, const std::string& s) {
    if (out == nullptr) return CFMOD_OK;
    *out = dup_string(s);
    return *out == nullptr ? fail(CFMOD_ERR_INVALID_ARG, "out of memory") : CFMOD_OK;
}

/// Runs `body` and maps library exceptions onto status codes.
template <class Body>
cfmod_status guarded(Body&& body) {
    try {
        return body();
    } catch (const cfmod::ZeroModulusError& e) {
        return fail(CFMOD_ERR_ZERO_MODULUS, e.what());
    } catch (const cfmod::NotInvertibleError& e) {
        return fail(CFMOD_ERR_NOT_INVERTIBLE, e.what());
    } catch (const cfmod::IndexError& e) {
        return fail(CFMOD_ERR_INDEX, e.what());
    } catch (const cfmod::MismatchError& e) {
        return fail(CFMOD_ERR_MISMATCH, e.what());
    } catch (const cfmod::ParseError& e) {
        return fail(CFMOD_ERR_PARSE, e.what());
    } catch (const cfmod::RangeError& e) {
        return fail(CFMOD_ERR_RANGE, e.what());
    } catch (const std::exception& e) {
        return fail(CFMOD_ERR_INVALID_ARG, e.what());
    }
}

cfmod_status parse_arg(const char* text, Int* out) {
    if (text == nullptr) throw cfmod::ParseError("null integer argument");
    *out = cfmod::parse_integer(text);
    return CFMOD_OK;
}

bool to_scale(cfmod_scale scale, cfmod::Scale* out) {
    switch (scale) {
        case CFMOD_SCALE_Q: *out = cfmod::Scale::Q; return true;
        case CFMOD_SCALE_THETA: *out = cfmod::Scale::Theta; return true;
    }
    return false;
}

}  // namespace

extern "C" {

const char* cfmod_version(void) { return "1.0.0"; }

const char* cfmod_status_message(cfmod_status status) {
    switch (status) {
        case CFMOD_OK: return "ok";
        case CFMOD_ERR_ZERO_MODULUS: return "modulus is zero";
        case CFMOD_ERR_NOT_INVERTIBLE: return "operand is not invertible";
        case CFMOD_ERR_RANGE: return "operand out of range";
        case CFMOD_ERR_INDEX: return "index out of range";
        case CFMOD_ERR_MISMATCH: return "digit string bound to another context";
        case CFMOD_ERR_PARSE: return "malformed number";
        case CFMOD_ERR_IO: return "i/o failure";
        case CFMOD_ERR_INVALID_ARG: return "invalid argument";
    }
    return "unknown status";
}

const char* cfmod_last_error(void) { return t_last_error.c_str(); }

void cfmod_string_free(char* s) { std::free(s); }

cfmod_status cfmod_ctx_new(const char* a, const char* d, cfmod_ctx** out) {
    if (out == nullptr) return fail(CFMOD_ERR_INVALID_ARG, "null output pointer");
    *out = nullptr;
    return guarded([&]() {
        Int av, dv;
        parse_arg(a, &av);
        parse_arg(d, &dv);
        *out = new cfmod_ctx{cfmod::ModContext(av, dv)};
        return CFMOD_OK;
    });
}

void cfmod_ctx_free(cfmod_ctx* ctx) { delete ctx; }

cfmod_status cfmod_ctx_length(const cfmod_ctx* ctx, int* out) {
    if (ctx == nullptr || out == nullptr)
        return fail(CFMOD_ERR_INVALID_ARG, "null argument");
    *out = ctx->mc.context().quotient_count();
    return CFMOD_OK;
}

cfmod_status cfmod_ctx_gcd(const cfmod_ctx* ctx, char** out) {
    if (ctx == nullptr || out == nullptr)
        return fail(CFMOD_ERR_INVALID_ARG, "null argument");
    return store(out, ctx->mc.context().gcd().get_str());
}

cfmod_status cfmod_ctx_quotient(const cfmod_ctx* ctx, int i, char** out) {
    if (ctx == nullptr || out == nullptr)
        return fail(CFMOD_ERR_INVALID_ARG, "null argument");
    return guarded(
        [&]() { return store(out, ctx->mc.context().quotient(i).get_str()); });
}

cfmod_status cfmod_ctx_convergent(const cfmod_ctx* ctx, int i, char** p_out,
                                  char** q_out) {
    if (ctx == nullptr) return fail(CFMOD_ERR_INVALID_ARG, "null argument");
    return guarded([&]() {
        const std::string p = ctx->mc.context().convergent_num(i).get_str();
        const std::string q = ctx->mc.context().convergent_den(i).get_str();
        cfmod_status st = store(p_out, p);
        if (st != CFMOD_OK) return st;
        return store(q_out, q);
    });
}

cfmod_status cfmod_ctx_remainder(const cfmod_ctx* ctx, int i, char** out) {
    if (ctx == nullptr || out == nullptr)
        return fail(CFMOD_ERR_INVALID_ARG, "null argument");
    return guarded(
        [&]() { return store(out, ctx->mc.context().remainder(i).get_str()); });
}

cfmod_status cfmod_ctx_signed_remainder(const cfmod_ctx* ctx, int i, char** out) {
    if (ctx == nullptr || out == nullptr)
        return fail(CFMOD_ERR_INVALID_ARG, "null argument");
    return guarded(
        [&]() { return store(out, ctx->mc.context().signed_remainder(i).get_str()); });
}

cfmod_status cfmod_ctx_tail(const cfmod_ctx* ctx, int i, char** num_out,
                            char** den_out) {
    if (ctx == nullptr) return fail(CFMOD_ERR_INVALID_ARG, "null argument");
    return guarded([&]() {
        const cfmod::Rational r = ctx->mc.context().tail(i);
        cfmod_status st = store(num_out, r.get_num().get_str());
        if (st != CFMOD_OK) return st;
        return store(den_out, r.get_den().get_str());
    });
}

cfmod_status cfmod_modmul(const char* a, const char* b, const char* d, char** out) {
    if (out == nullptr) return fail(CFMOD_ERR_INVALID_ARG, "null output pointer");
    return guarded([&]() {
        Int av, bv, dv;
        parse_arg(a, &av);
        parse_arg(b, &bv);
        parse_arg(d, &dv);
        return store(out, cfmod::modmul(av, bv, dv).get_str());
    });
}

cfmod_status cfmod_naive_modmul(const char* a, const char* b, const char* d,
                                char** out) {
    if (out == nullptr) return fail(CFMOD_ERR_INVALID_ARG, "null output pointer");
    return guarded([&]() {
        Int av, bv, dv;
        parse_arg(a, &av);
        parse_arg(b, &bv);
        parse_arg(d, &dv);
        return store(out, cfmod::naive_modmul(av, bv, dv).get_str());
    });
}

cfmod_status cfmod_moddiv(const char* a, const char* b, const char* d,
                          cfmod_div_method method, int* correction_out,
                          char** out) {
    if (out == nullptr) return fail(CFMOD_ERR_INVALID_ARG, "null output pointer");
    if (method != CFMOD_DIV_THEOREM2 && method != CFMOD_DIV_ITO_T2)
        return fail(CFMOD_ERR_INVALID_ARG, "unknown division method");
    return guarded([&]() {
        Int av, bv, dv;
        parse_arg(a, &av);
        parse_arg(b, &bv);
        parse_arg(d, &dv);
        const cfmod::DivOutcome outcome = method == CFMOD_DIV_THEOREM2
                                              ? cfmod::moddiv_theorem2_detail(av, bv, dv)
                                              : cfmod::moddiv_ito_t2_detail(av, bv, dv);
        if (correction_out != nullptr) *correction_out = outcome.adjusted ? 1 : 0;
        return store(out, outcome.value.get_str());
    });
}

cfmod_status cfmod_modinv(const char* a, const char* d, char** out) {
    if (out == nullptr) return fail(CFMOD_ERR_INVALID_ARG, "null output pointer");
    return guarded([&]() {
        Int av, dv;
        parse_arg(a, &av);
        parse_arg(d, &dv);
        return store(out, cfmod::modinv(av, dv).get_str());
    });
}

cfmod_status cfmod_ctx_modmul(const cfmod_ctx* ctx, const char* b, char** out) {
    if (ctx == nullptr || out == nullptr)
        return fail(CFMOD_ERR_INVALID_ARG, "null argument");
    return guarded([&]() {
        Int bv;
        parse_arg(b, &bv);
        return store(out, ctx->mc.mul(bv).get_str());
    });
}

cfmod_status cfmod_ctx_moddiv(const cfmod_ctx* ctx, const char* b, char** out) {
    if (ctx == nullptr || out == nullptr)
        return fail(CFMOD_ERR_INVALID_ARG, "null argument");
    return guarded([&]() {
        Int bv;
        parse_arg(b, &bv);
        return store(out, ctx->mc.div(bv).get_str());
    });
}

cfmod_status cfmod_encode(const cfmod_ctx* ctx, const char* value,
                          cfmod_scale scale, char** digits_out) {
    if (ctx == nullptr || digits_out == nullptr)
        return fail(CFMOD_ERR_INVALID_ARG, "null argument");
    cfmod::Scale s;
    if (!to_scale(scale, &s)) return fail(CFMOD_ERR_INVALID_ARG, "unknown scale");
    return guarded([&]() {
        Int v;
        parse_arg(value, &v);
        const cfmod::DigitString ds =
            s == cfmod::Scale::Q ? cfmod::ostrowski_encode(v, ctx->mc.context())
                                 : cfmod::theta_encode(v, ctx->mc.context());
        return store(digits_out, ds.to_csv());
    });
}

cfmod_status cfmod_decode(const cfmod_ctx* ctx, const char* digits,
                          cfmod_scale scale, char** out) {
    if (ctx == nullptr || digits == nullptr || out == nullptr)
        return fail(CFMOD_ERR_INVALID_ARG, "null argument");
    cfmod::Scale s;
    if (!to_scale(scale, &s)) return fail(CFMOD_ERR_INVALID_ARG, "unknown scale");
    return guarded([&]() {
        const cfmod::DigitString ds =
            cfmod::DigitString::from_csv(digits, s, ctx->mc.context());
        return store(out, cfmod::decode(ds, ctx->mc.context()).get_str());
    });
}

cfmod_status cfmod_digits_valid(const cfmod_ctx* ctx, const char* digits,
                                cfmod_scale scale, int* out) {
    if (ctx == nullptr || digits == nullptr || out == nullptr)
        return fail(CFMOD_ERR_INVALID_ARG, "null argument");
    cfmod::Scale s;
    if (!to_scale(scale, &s)) return fail(CFMOD_ERR_INVALID_ARG, "unknown scale");
    return guarded([&]() {
        const cfmod::DigitString ds =
            cfmod::DigitString::from_csv(digits, s, ctx->mc.context());
        *out = cfmod::validate_markovian(ds, ctx->mc.context()) ? 1 : 0;
        return CFMOD_OK;
    });
}

cfmod_status cfmod_gauss_kuzmin_pmf(unsigned long k, double* out) {
    if (out == nullptr) return fail(CFMOD_ERR_INVALID_ARG, "null output pointer");
    return guarded([&]() {
        *out = cfmod::gauss_kuzmin_pmf(k);
        return CFMOD_OK;
    });
}

cfmod_status cfmod_bn1_cdf(unsigned long k, double* out) {
    if (out == nullptr) return fail(CFMOD_ERR_INVALID_ARG, "null output pointer");
    return guarded([&]() {
        *out = cfmod::bn1_cdf(k);
        return CFMOD_OK;
    });
}

cfmod_status cfmod_write_bn1_table(unsigned kmax, const char* path) {
    if (path == nullptr) return fail(CFMOD_ERR_INVALID_ARG, "null path");
    return guarded([&]() {
        try {
            cfmod::write_bn1_table(kmax, std::string(path));
        } catch (const cfmod::Error& e) {
            return fail(CFMOD_ERR_IO, e.what());
        }
        return CFMOD_OK;
    });
}

cfmod_status cfmod_empirical_bn1(const char* n_limit, unsigned long long samples,
                                 unsigned long long seed, unsigned kmax,
                                 unsigned workers, double* cdf_out) {
    if (cdf_out == nullptr) return fail(CFMOD_ERR_INVALID_ARG, "null output pointer");
    return guarded([&]() {
        Int n;
        parse_arg(n_limit, &n);
        const cfmod::Bn1Distribution dist =
            cfmod::empirical_bn1(n, samples, seed, kmax, workers);
        for (unsigned k = 0; k <= kmax; ++k) cdf_out[k] = dist.cdf[k];
        return CFMOD_OK;
    });
}

cfmod_status cfmod_quotient_stats(unsigned bits, unsigned long long samples,
                                  unsigned long long seed, unsigned kmax,
                                  unsigned workers, const char* csv_path,
                                  double* pmf_out, double* geometric_mean_out) {
    if (kmax == 0) return fail(CFMOD_ERR_RANGE, "kmax must be >= 1");
    return guarded([&]() {
        const cfmod::QuotientHistogram hist =
            cfmod::empirical_quotients(bits, samples, seed, kmax, workers);
        if (pmf_out != nullptr)
            for (unsigned k = 1; k <= kmax; ++k) pmf_out[k - 1] = hist.frequency(k);
        if (geometric_mean_out != nullptr)
            *geometric_mean_out = hist.geometric_mean();
        if (csv_path != nullptr) {
            std::ofstream out(csv_path);
            if (!out) return fail(CFMOD_ERR_IO, std::string("cannot open ") + csv_path);
            hist.write_csv(out);
            out.flush();
            if (!out) return fail(CFMOD_ERR_IO, std::string("write failed: ") + csv_path);
        }
        return CFMOD_OK;
    });
}

cfmod_status cfmod_bench(const unsigned* bits, size_t bits_count,
                         unsigned long long reps, unsigned long long seed,
                         int subtractive, const char* csv_path, char** table_out) {
    if (bits == nullptr || bits_count == 0)
        return fail(CFMOD_ERR_INVALID_ARG, "need at least one bit size");
    return guarded([&]() {
        cfmod::bench::BenchConfig config;
        config.bits.assign(bits, bits + bits_count);
        config.reps = reps;
        config.seed = seed;
        const cfmod::bench::BenchReport report =
            subtractive ? cfmod::bench::run_bench_subtractive(config)
                        : cfmod::bench::run_bench(config);
        if (csv_path != nullptr) {
            std::ofstream out(csv_path);
            if (!out) return fail(CFMOD_ERR_IO, std::string("cannot open ") + csv_path);
            report.write_csv(out);
            out.flush();
            if (!out) return fail(CFMOD_ERR_IO, std::string("write failed: ") + csv_path);
        }
        if (table_out != nullptr) {
            std::ostringstream table;
            report.write_table(table);
            return store(table_out, table.str());
        }
        return CFMOD_OK;
    });
}

}  // extern "C"
