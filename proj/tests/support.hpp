// Shared oracles for the test suites. Everything here recomputes results
// from first principles (plain Euclidean traces, exact rational
// arithmetic, brute-force enumeration) independently of the library's
// evaluation paths.
#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cfmod/cf_context.hpp"
#include "cfmod/digit_string.hpp"

namespace testsupport {

template <class I>
I from_int(const cfmod::Int& v);

template <>
inline long long from_int<long long>(const cfmod::Int& v) {
    return mpz_get_si(v.get_mpz_t());
}

template <>
inline cfmod::Int from_int<cfmod::Int>(const cfmod::Int& v) {
    return v;
}

inline long long gcd_of(long long a, long long b) { return std::gcd(a, b); }
inline cfmod::Int gcd_of(const cfmod::Int& a, const cfmod::Int& b) {
    cfmod::Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Checks every structural identity of an expansion. Returns an empty
/// string on success, otherwise a description of the first failure.
template <class I>
std::string check_invariants_with(const cfmod::CfContext& ctx) {
    const int n = ctx.quotient_count();
    const I a = from_int<I>(ctx.multiplier());
    const I d = from_int<I>(ctx.modulus());
    const I g = from_int<I>(ctx.gcd());

    // storage: th[i+1] = theta'_i, p[i+1] = p_i, q[i+1] = q_i, k[i] = k_i
    std::vector<I> th(n + 2), p(n + 2), q(n + 2), k(n + 1);
    for (int i = -1; i <= n; ++i) {
        th[i + 1] = from_int<I>(ctx.remainder(i));
        p[i + 1] = from_int<I>(ctx.convergent_num(i));
        q[i + 1] = from_int<I>(ctx.convergent_den(i));
    }
    for (int i = 1; i <= n; ++i) k[i] = from_int<I>(ctx.quotient(i));

    auto where = [&](const std::string& what) {
        return what + " for (" + ctx.multiplier().get_str() + ", " +
               ctx.modulus().get_str() + ")";
    };

    if (th[0] != d || th[1] != a) return where("remainder seed");
    if (p[0] != 1 || p[1] != 0 || q[0] != 0 || q[1] != 1)
        return where("convergent seed");
    if (th[n + 1] != 0) return where("final remainder nonzero");
    for (int i = 0; i + 1 <= n - 1; ++i)
        if (th[i + 1] <= th[i + 2]) return where("remainders not decreasing");
    for (int i = 1; i <= n; ++i) {
        if (th[i - 1] != k[i] * th[i] + th[i + 1]) return where("remainder recurrence");
        if (th[i + 1] < 0 || th[i + 1] >= th[i]) return where("remainder range");
        if (p[i + 1] != p[i - 1] + k[i] * p[i]) return where("p recurrence");
        if (q[i + 1] != q[i - 1] + k[i] * q[i]) return where("q recurrence");
    }
    for (int i = -1; i <= n; ++i) {
        const I expected = (i % 2 != 0) ? I(p[i + 1] * d - q[i + 1] * a)
                                        : I(q[i + 1] * a - p[i + 1] * d);
        if (th[i + 1] != expected) return where("Bezout chain");
        const I eta = from_int<I>(ctx.signed_remainder(i));
        if (eta != ((i % 2 != 0) ? I(-th[i + 1]) : th[i + 1]))
            return where("signed remainder accessor");
    }
    for (int i = 0; i <= n; ++i) {
        const I det = q[i + 1] * p[i] - p[i + 1] * q[i];
        if (det != ((i % 2 != 0) ? I(-1) : I(1))) return where("determinant");
    }
    if (g != gcd_of(a, d)) return where("gcd");
    if (q[n + 1] * g != d || p[n + 1] * g != a) return where("q_n = d/g");
    if (n >= 1 && k[n] < 2) return where("last quotient below 2");

    // telescoping sums from the alternating decompositions
    if (n % 2 != 0) {
        I sum(0);
        for (int i = 1; i <= n; i += 2) sum += k[i] * q[i];  // k_i * q_{i-1}
        if (sum != q[n + 1]) return where("odd telescope");
    } else {
        I sum(0);
        for (int i = 2; i <= n; i += 2) sum += k[i] * q[i];
        if (sum != q[n + 1] - 1) return where("even telescope");
    }

    // Bezout identity proper
    {
        I bez = q[n] * a - p[n] * d;
        if ((n - 1) % 2 != 0) bez = -bez;
        if (bez != g) return where("Bezout identity");
    }
    return std::string();
}

inline std::string check_invariants(const cfmod::CfContext& ctx) {
    if (mpz_sizeinbase(ctx.modulus().get_mpz_t(), 2) <= 30)
        return check_invariants_with<long long>(ctx);
    return check_invariants_with<cfmod::Int>(ctx);
}

/// Partial quotients recomputed with the exact-rational recurrence
/// theta_i = theta_{i-2} - floor(theta_{i-2}/theta_{i-1}) * theta_{i-1},
/// theta_{-1} = 1, theta_0 = a/d.
inline std::vector<cfmod::Int> rational_quotients(const cfmod::Int& a,
                                                  const cfmod::Int& d) {
    cfmod::Rational prev(1);
    cfmod::Rational cur(a, d);
    cur.canonicalize();
    std::vector<cfmod::Int> ks;
    while (cur != 0) {
        cfmod::Rational ratio = prev / cur;
        cfmod::Int k;
        mpz_fdiv_q(k.get_mpz_t(), ratio.get_num().get_mpz_t(),
                   ratio.get_den().get_mpz_t());
        cfmod::Rational next = prev - cfmod::Rational(k) * cur;
        prev = cur;
        cur = next;
        ks.push_back(k);
    }
    return ks;
}

/// Brute-force uniqueness check of the Ostrowski system: enumerates all
/// digit vectors (b_1..b_n) satisfying the Markovian conditions and
/// verifies their values 1 + sum b_i q_{i-1} cover [1, q_n] exactly once.
/// Needs q_n to fit comfortably in 64 bits; intended for q_n <= ~10^6.
inline bool unique_cover(const cfmod::CfContext& ctx, std::string* err) {
    const int n = ctx.quotient_count();
    const long long qn = from_int<long long>(ctx.convergent_den(n));
    std::vector<long long> k(n + 1), q(n + 2);
    for (int i = 1; i <= n; ++i) k[i] = from_int<long long>(ctx.quotient(i));
    for (int i = -1; i <= n; ++i)
        q[i + 1] = from_int<long long>(ctx.convergent_den(i));

    std::vector<std::uint8_t> seen(static_cast<std::size_t>(qn) + 1, 0);
    long long produced = 0;
    bool ok = true;

    // digits chosen from the top; `saturated` = (b_{i+1} == k_{i+1})
    auto rec = [&](auto&& self, int i, bool saturated, long long value) -> void {
        if (!ok) return;
        if (i == 0) {
            ++produced;
            if (value < 1 || value > qn || seen[static_cast<std::size_t>(value)]) {
                ok = false;
                if (err) *err = "duplicate or out-of-range value " + std::to_string(value);
            } else {
                seen[static_cast<std::size_t>(value)] = 1;
            }
            return;
        }
        const long long cap = saturated ? 0 : (i == 1 ? k[1] - 1 : k[i]);
        for (long long b = 0; b <= cap; ++b)
            self(self, i - 1, b == k[i], value + b * q[i]);  // q[i] = q_{i-1}
    };
    rec(rec, n, false, 1);

    if (ok && produced != qn) {
        ok = false;
        if (err)
            *err = "expected " + std::to_string(qn) + " representations, got " +
                   std::to_string(produced);
    }
    return ok;
}

}  // namespace testsupport
