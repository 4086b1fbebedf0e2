#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfmod/cf_context.hpp"

namespace cfmod {

/// The two numeration scales a digit string can live in.
///
///   Q      digit b_i multiplies q_{i-1}; value = 1 + sum b_i q_{i-1}
///          (Ostrowski system for positive integers)
///   Theta  digit b_i multiplies theta'_{i-1}; value = sum b_i theta'_{i-1}
///          (dual system for residues 0 <= b < d, gcd(a, d) = 1)
enum class Scale { Q, Theta };

/// Coefficient vector (b_1, ..., b_{n+1}) over one context's basis.
/// b_{n+1} is the overflow digit: it multiplies q_n (Q scale) or
/// theta'_n = 0 (Theta scale).
///
/// Digits b_1..b_n are stored as machine words and transparently widened
/// to arbitrary precision when a digit exceeds 64 bits (possible when
/// some k_i is huge). The overflow digit is unbounded and always stored
/// at arbitrary precision.
///
/// A digit string remembers the (a, d) pair whose basis it was written
/// in; evaluating it against a different context is an error.
class DigitString {
public:
    /// Builds from explicit digits b_1..b_{n+1} (so digits.size() must be
    /// ctx.quotient_count() + 1). Digits must be non-negative.
    DigitString(Scale scale, std::vector<Int> digits, const CfContext& ctx);

    Scale scale() const noexcept { return scale_; }

    /// Number of digits, n + 1.
    int length() const noexcept { return static_cast<int>(count_) + 1; }

    /// b_i for 1 <= i <= length().
    Int digit(int i) const;

    /// b_{n+1}.
    const Int& overflow_digit() const noexcept { return overflow_; }

    bool bound_to(const CfContext& ctx) const noexcept {
        return ctx_a_ == ctx.multiplier() && ctx_d_ == ctx.modulus();
    }
    const Int& context_multiplier() const noexcept { return ctx_a_; }
    const Int& context_modulus() const noexcept { return ctx_d_; }

    /// sum b_i * basis[i-1]; basis.size() must equal length().
    Int weighted_sum(std::span<const Int> basis) const;

    /// Least-significant-first rendering "b1,b2,...,bn+1".
    std::string to_csv() const;

    /// Parses the CSV rendering and binds it to ctx. Throws ParseError on
    /// malformed text and RangeError when the digit count is not n + 1.
    static DigitString from_csv(std::string_view text, Scale scale,
                                const CfContext& ctx);

private:
    friend DigitString ostrowski_encode(const Int&, const CfContext&);
    friend DigitString theta_encode(const Int&, const CfContext&);

    DigitString(Scale scale, const CfContext& ctx);

    // assigns b_i (1 <= i <= n) from a non-negative value, widening on demand
    void set_digit(int i, const Int& value);
    bool wide() const noexcept { return !wide_.empty(); }

    Scale scale_;
    std::size_t count_ = 0;            // n
    std::vector<std::uint64_t> small_;  // b_1..b_n unless widened
    std::vector<Int> wide_;             // b_1..b_n when widened
    Int overflow_;                      // b_{n+1}
    Int ctx_a_;
    Int ctx_d_;
};

/// Greedy decomposition of value >= 1 over the q scale:
/// value = 1 + sum b_i q_{i-1}, digits extracted from the top index down,
/// b_i = floor(tmp / q_{i-1}). The result satisfies the Q-scale Markovian
/// conditions; the overflow digit is floor((value-1) / q_n).
DigitString ostrowski_encode(const Int& value, const CfContext& ctx);

/// Greedy decomposition of a residue 0 <= value < d over the theta scale:
/// value = sum b_i theta'_{i-1}. Requires gcd(a, d) == 1 so that
/// theta'_{n-1} == 1 makes the expansion exact; b_{n+1} is always 0.
DigitString theta_encode(const Int& value, const CfContext& ctx);

/// Evaluates the defining sum of the digit string's scale.
Int decode(const DigitString& ds, const CfContext& ctx);

/// Checks the scale's Markovian digit conditions:
///   Q:     b_1 <= k_1 - 1; b_i <= k_i; b_i = 0 whenever b_{i+1} = k_{i+1}
///          (the overflow digit is exempt)
///   Theta: b_i <= k_i; b_{i+1} = 0 whenever b_i = k_i; b_{n+1} = 0
bool validate_markovian(const DigitString& ds, const CfContext& ctx);

}  // namespace cfmod
