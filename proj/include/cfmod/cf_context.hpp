#pragma once

#include <span>
#include <vector>

#include "cfmod/bigint.hpp"

namespace cfmod {

/// Every sequence produced by running the extended Euclidean algorithm on
/// a pair (a, d), i.e. by expanding a/d as a finite continued fraction
/// [0; k_1, ..., k_n]:
///
///   k_i        partial quotients, i = 1..n
///   p_i, q_i   convergent numerators/denominators, i = -1..n
///              (p_{-1}=1, p_0=0, q_{-1}=0, q_0=1)
///   theta'_i   Euclidean remainders, i = -1..n
///              (theta'_{-1}=d, theta'_0=a, theta'_n=0)
///
/// The signed remainders eta'_i = (-1)^i * theta'_i and the exact
/// rational tails r_i = theta'_i / theta'_{i-1} are derived accessors.
///
/// a is reduced modulo d on entry. a == 0 (mod d) and d == 1 give a
/// degenerate context with n == 0; such contexts are only useful to the
/// trivial fast paths of the modular operations.
///
/// Accessors take indices in the convention above, including -1.
/// A context is immutable after construction and safe to share across
/// threads.
class CfContext {
public:
    /// Runs the expansion. Requires d >= 1 and a >= 0; a is reduced
    /// modulo d first. Throws ZeroModulusError for d == 0 and
    /// RangeError for negative inputs.
    static CfContext expand(Int a, Int d);

    /// The reduced multiplier, 0 <= multiplier() < modulus().
    const Int& multiplier() const noexcept { return a_; }
    const Int& modulus() const noexcept { return d_; }

    /// Number of partial quotients n. Zero only for degenerate contexts.
    int quotient_count() const noexcept { return n_; }
    bool degenerate() const noexcept { return n_ == 0; }

    /// gcd(a, d) == theta'_{n-1}.
    const Int& gcd() const noexcept { return g_; }

    /// k_i for 1 <= i <= n.
    const Int& quotient(int i) const;
    /// p_i for -1 <= i <= n.
    const Int& convergent_num(int i) const;
    /// q_i for -1 <= i <= n.
    const Int& convergent_den(int i) const;
    /// theta'_i for -1 <= i <= n.
    const Int& remainder(int i) const;
    /// eta'_i = (-1)^i * theta'_i for -1 <= i <= n.
    Int signed_remainder(int i) const;
    /// Exact tail r_i = theta'_i / theta'_{i-1} in canonical form,
    /// for 0 <= i <= n.
    Rational tail(int i) const;

    /// Contiguous view of q_0..q_n: entry j pairs with digit b_{j+1} of a
    /// q-scale digit string.
    std::span<const Int> q_scale_basis() const noexcept;
    /// Contiguous view of theta'_0..theta'_n, aligned the same way.
    std::span<const Int> theta_scale_basis() const noexcept;

    /// True when `other` denotes the same expansion (same reduced a and d).
    bool same_expansion(const CfContext& other) const noexcept {
        return a_ == other.a_ && d_ == other.d_;
    }

private:
    CfContext() = default;

    void require_index(int i, int lo, const char* what) const;

    Int a_;
    Int d_;
    Int g_;
    int n_ = 0;
    std::vector<Int> k_;      // k_[i-1] = k_i
    std::vector<Int> p_;      // p_[i+1] = p_i
    std::vector<Int> q_;      // q_[i+1] = q_i
    std::vector<Int> theta_;  // theta_[i+1] = theta'_i
};

}  // namespace cfmod
