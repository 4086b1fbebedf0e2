#include "cfmod/cf_context.hpp"

#include <string>
#include <utility>

#include "cfmod/errors.hpp"

namespace cfmod {

CfContext CfContext::expand(Int a, Int d) {
    if (sgn(d) == 0) throw ZeroModulusError();
    if (sgn(d) < 0) throw RangeError("modulus must be positive");
    if (sgn(a) < 0) throw RangeError("multiplier must be non-negative");
    a %= d;

    CfContext ctx;
    // Upper bound on n: the expansion of a/d has at most
    // ~log_phi(d) quotients (Fibonacci worst case).
    const std::size_t cap = mpz_sizeinbase(d.get_mpz_t(), 2) * 3 / 2 + 4;
    ctx.theta_.reserve(cap);
    ctx.p_.reserve(cap);
    ctx.q_.reserve(cap);
    ctx.k_.reserve(cap);

    ctx.theta_.push_back(d);  // theta'_{-1}
    ctx.theta_.push_back(a);  // theta'_0
    ctx.p_.emplace_back(1);   // p_{-1}
    ctx.p_.emplace_back(0);   // p_0
    ctx.q_.emplace_back(0);   // q_{-1}
    ctx.q_.emplace_back(1);   // q_0

    Int quot, rem;
    while (ctx.theta_.back() != 0) {
        const std::size_t m = ctx.theta_.size();
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(),
                    ctx.theta_[m - 2].get_mpz_t(), ctx.theta_[m - 1].get_mpz_t());
        Int next_p = ctx.p_[m - 2];
        mpz_addmul(next_p.get_mpz_t(), quot.get_mpz_t(), ctx.p_[m - 1].get_mpz_t());
        Int next_q = ctx.q_[m - 2];
        mpz_addmul(next_q.get_mpz_t(), quot.get_mpz_t(), ctx.q_[m - 1].get_mpz_t());
        ctx.k_.push_back(quot);
        ctx.p_.push_back(std::move(next_p));
        ctx.q_.push_back(std::move(next_q));
        ctx.theta_.push_back(rem);
    }

    ctx.n_ = static_cast<int>(ctx.k_.size());
    ctx.g_ = ctx.theta_[ctx.n_];  // theta'_{n-1}; equals d when a == 0
    ctx.a_ = std::move(a);
    ctx.d_ = std::move(d);
    return ctx;
}

void CfContext::require_index(int i, int lo, const char* what) const {
    if (i < lo || i > n_)
        throw IndexError(std::string(what) + " index " + std::to_string(i) +
                         " outside [" + std::to_string(lo) + ", " +
                         std::to_string(n_) + "]");
}

const Int& CfContext::quotient(int i) const {
    require_index(i, 1, "quotient");
    return k_[static_cast<std::size_t>(i) - 1];
}

const Int& CfContext::convergent_num(int i) const {
    require_index(i, -1, "convergent");
    return p_[static_cast<std::size_t>(i + 1)];
}

const Int& CfContext::convergent_den(int i) const {
    require_index(i, -1, "convergent");
    return q_[static_cast<std::size_t>(i + 1)];
}

const Int& CfContext::remainder(int i) const {
    require_index(i, -1, "remainder");
    return theta_[static_cast<std::size_t>(i + 1)];
}

Int CfContext::signed_remainder(int i) const {
    require_index(i, -1, "remainder");
    const Int& t = theta_[static_cast<std::size_t>(i + 1)];
    return (i % 2 != 0) ? Int(-t) : t;
}

Rational CfContext::tail(int i) const {
    require_index(i, 0, "tail");
    Rational r(theta_[static_cast<std::size_t>(i + 1)],
               theta_[static_cast<std::size_t>(i)]);
    r.canonicalize();
    return r;
}

std::span<const Int> CfContext::q_scale_basis() const noexcept {
    return std::span<const Int>(q_).subspan(1);
}

std::span<const Int> CfContext::theta_scale_basis() const noexcept {
    return std::span<const Int>(theta_).subspan(1);
}

}  // namespace cfmod
