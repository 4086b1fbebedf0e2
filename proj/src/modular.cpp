#include "cfmod/modular.hpp"

#include <iostream>
#include <utility>

#include "cfmod/errors.hpp"

namespace cfmod {

namespace {

void require_modulus(const Int& d) {
    if (sgn(d) == 0) throw ZeroModulusError();
    if (sgn(d) < 0) throw RangeError("modulus must be positive");
}

void require_invertible(const CfContext& ctx) {
    if (ctx.gcd() != 1)
        throw NotInvertibleError(ctx.gcd(), ctx.multiplier().get_str() +
                                                " is not invertible modulo " +
                                                ctx.modulus().get_str() +
                                                " (gcd = " + ctx.gcd().get_str() + ")");
}

std::vector<Int> build_eta_basis(const CfContext& ctx) {
    const int n = ctx.quotient_count();
    std::vector<Int> basis;
    basis.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) basis.push_back(ctx.signed_remainder(j));
    return basis;
}

std::vector<Int> build_signed_q_basis(const CfContext& ctx) {
    const int n = ctx.quotient_count();
    std::vector<Int> basis;
    basis.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        const Int& q = ctx.convergent_den(j);
        basis.push_back(j % 2 != 0 ? Int(-q) : q);
    }
    return basis;
}

Int eval_mul(const CfContext& ctx, std::span<const Int> eta_basis, const Int& b) {
    if (sgn(b) < 0) throw RangeError("multiplication operand must be non-negative");
    if (ctx.modulus() == 1 || ctx.multiplier() == 0 || b == 0) return Int(0);
    DigitString ds = ostrowski_encode(b, ctx);
    Int r = ctx.multiplier() + ds.weighted_sum(eta_basis);
    // The sum lies in [0, d]; it attains d exactly when b is a multiple of
    // q_n (the residual digit string is then the maximal one, whose
    // eta-evaluation telescopes to d), and there the product reduces to 0.
    if (r == ctx.modulus()) return Int(0);
    if (sgn(r) < 0 || r > ctx.modulus())
        throw Error("internal: basis-change product escaped [0, d]");
    return r;
}

DivOutcome eval_div(const CfContext& ctx, std::span<const Int> signed_q_basis,
                    const Int& b) {
    require_invertible(ctx);
    if (sgn(b) < 0 || b >= ctx.modulus())
        throw RangeError("division operand must satisfy 0 <= b < d");
    DigitString ds = theta_encode(b, ctx);
    Int c = ds.weighted_sum(signed_q_basis);
    if (c <= -ctx.modulus() || c >= ctx.modulus())
        throw Error("internal: basis-change quotient escaped (-d, d)");
    DivOutcome out;
    out.adjusted = sgn(c) < 0;
    out.value = out.adjusted ? Int(c + ctx.modulus()) : c;
    out.raw_sum = std::move(c);
    return out;
}

}  // namespace

ModContext::ModContext(const Int& a, const Int& d) : ModContext(CfContext::expand(a, d)) {}

ModContext::ModContext(CfContext ctx)
    : ctx_(std::move(ctx)),
      eta_basis_(build_eta_basis(ctx_)),
      signed_q_basis_(build_signed_q_basis(ctx_)) {}

Int ModContext::mul(const Int& b) const { return eval_mul(ctx_, eta_basis_, b); }

Int ModContext::div(const Int& b) const { return div_detail(b).value; }

DivOutcome ModContext::div_detail(const Int& b) const {
    return eval_div(ctx_, signed_q_basis_, b);
}

Int naive_modmul(const Int& a, const Int& b, const Int& d) {
    require_modulus(d);
    if (sgn(a) < 0 || sgn(b) < 0) throw RangeError("operands must be non-negative");
    Int r;
    mpz_mul(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
    return r;
}

Int modmul(const Int& a, const Int& b, const Int& d) {
    require_modulus(d);
    if (sgn(a) < 0 || sgn(b) < 0) throw RangeError("operands must be non-negative");
    if (d == 1 || b == 0) return Int(0);
    CfContext ctx = CfContext::expand(a, d);
    if (ctx.multiplier() == 0) return Int(0);
    return eval_mul(ctx, build_eta_basis(ctx), b);
}

DivOutcome moddiv_theorem2_detail(const Int& a, const Int& b, const Int& d) {
    require_modulus(d);
    if (sgn(a) < 0) throw RangeError("operands must be non-negative");
    CfContext ctx = CfContext::expand(a, d);
    return eval_div(ctx, build_signed_q_basis(ctx), b);
}

Int moddiv_theorem2(const Int& a, const Int& b, const Int& d) {
    return moddiv_theorem2_detail(a, b, d).value;
}

DivOutcome moddiv_ito_t2_detail(const Int& a, const Int& b, const Int& d) {
    require_modulus(d);
    if (sgn(a) < 0) throw RangeError("operands must be non-negative");
    CfContext ctx = CfContext::expand(a, d);
    require_invertible(ctx);
    if (sgn(b) < 0 || b >= d) throw RangeError("division operand must satisfy 0 <= b < d");

    const int n = ctx.quotient_count();
    Int m = b;
    Int c, sum(0);
    for (int i = 1; i <= n; ++i) {
        const Int& theta = ctx.remainder(i - 1);
        mpz_cdiv_q(c.get_mpz_t(), m.get_mpz_t(), theta.get_mpz_t());
        // m <- theta'_{i-1} * c_i - m
        mpz_neg(m.get_mpz_t(), m.get_mpz_t());
        mpz_addmul(m.get_mpz_t(), c.get_mpz_t(), theta.get_mpz_t());
        if (sgn(c) != 0)
            mpz_addmul(sum.get_mpz_t(), c.get_mpz_t(), ctx.convergent_den(i - 1).get_mpz_t());
    }
    // theta'_{n-1} == 1 forces m == 0 here

    DivOutcome out;
    out.adjusted = sum >= d;
    if (out.adjusted) {
        std::cerr << "cfmod: ceiling-route division returned an unreduced value for a="
                  << a.get_str() << " b=" << b.get_str() << " d=" << d.get_str()
                  << "\n";
        out.value = sum % d;
    } else {
        out.value = sum;
    }
    out.raw_sum = std::move(sum);
    return out;
}

Int moddiv_ito_t2(const Int& a, const Int& b, const Int& d) {
    return moddiv_ito_t2_detail(a, b, d).value;
}

Int modinv(const Int& a, const Int& d) {
    require_modulus(d);
    if (sgn(a) < 0) throw RangeError("operands must be non-negative");
    if (d == 1) return Int(0);
    CfContext ctx = CfContext::expand(a, d);
    require_invertible(ctx);
    const int n = ctx.quotient_count();
    Int inv = ctx.convergent_den(n - 1);
    if ((n - 1) % 2 != 0) mpz_neg(inv.get_mpz_t(), inv.get_mpz_t());
    mpz_fdiv_r(inv.get_mpz_t(), inv.get_mpz_t(), d.get_mpz_t());
    return inv;
}

}  // namespace cfmod
