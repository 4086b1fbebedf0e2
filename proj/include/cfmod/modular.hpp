#pragma once

#include <vector>

#include "cfmod/cf_context.hpp"
#include "cfmod/digit_string.hpp"

namespace cfmod {

/// Result of a modular division, keeping the evaluation visible:
/// `raw_sum` is the basis-change sum before any adjustment, `value` the
/// reduced result, and `adjusted` records whether an adjustment fired
/// (+d for the q-scale route, a defensive mod for the ceiling route).
struct DivOutcome {
    Int value;
    Int raw_sum;
    bool adjusted = false;
};

/// Reusable precomputation for repeated multiplications/divisions by the
/// same a modulo d: the expansion of a/d plus the two evaluation bases
/// (eta'_{i-1} and (-1)^{i-1} q_{i-1} for i = 1..n+1).
/// Immutable after construction; safe to share across threads.
class ModContext {
public:
    ModContext(const Int& a, const Int& d);
    explicit ModContext(CfContext ctx);

    const CfContext& context() const noexcept { return ctx_; }

    /// (a*b) mod d for any b >= 0. Writes b in the q scale and evaluates
    /// the same digits against eta': a + sum b_i eta'_{i-1}. The sum is
    /// already reduced; no trailing division happens.
    Int mul(const Int& b) const;

    /// (a^-1 * b) mod d for 0 <= b < d; requires gcd(a, d) = 1.
    Int div(const Int& b) const;
    DivOutcome div_detail(const Int& b) const;

private:
    CfContext ctx_;
    std::vector<Int> eta_basis_;       // eta'_0..eta'_n
    std::vector<Int> signed_q_basis_;  // q_0, -q_1, q_2, ...
};

/// (a*b) mod d by direct multiplication then Euclidean reduction.
/// Test oracle and benchmark baseline.
Int naive_modmul(const Int& a, const Int& b, const Int& d);

/// (a*b) mod d through the continued-fraction basis change. Accepts any
/// a, b >= 0 and d >= 1; b may exceed d (the overflow digit multiplies
/// eta'_n = 0).
Int modmul(const Int& a, const Int& b, const Int& d);

/// (a^-1 * b) mod d via the theta-scale decomposition of b evaluated
/// against the alternating q basis. The raw sum c lies in (-d, d); the
/// result is c, or c + d when c is negative.
Int moddiv_theorem2(const Int& a, const Int& b, const Int& d);
DivOutcome moddiv_theorem2_detail(const Int& a, const Int& b, const Int& d);

/// (a^-1 * b) mod d via the ceiling-based digit expansion
///   c_i = ceil(m_{i-1} / theta'_{i-1}),  m_i = theta'_{i-1} c_i - m_{i-1},
/// evaluated as sum c_i q_{i-1}. Empirically the sum is already reduced;
/// since no proof of that is known the implementation still applies (and
/// reports) a defensive final reduction.
Int moddiv_ito_t2(const Int& a, const Int& b, const Int& d);
DivOutcome moddiv_ito_t2_detail(const Int& a, const Int& b, const Int& d);

/// a^-1 mod d, read off the expansion as ((-1)^{n-1} q_{n-1}) mod d.
Int modinv(const Int& a, const Int& d);

}  // namespace cfmod
