#include "cfmod/digit_string.hpp"

#include <utility>

#include "cfmod/errors.hpp"

namespace cfmod {

DigitString::DigitString(Scale scale, const CfContext& ctx)
    : scale_(scale),
      count_(static_cast<std::size_t>(ctx.quotient_count())),
      small_(count_, 0),
      ctx_a_(ctx.multiplier()),
      ctx_d_(ctx.modulus()) {}

DigitString::DigitString(Scale scale, std::vector<Int> digits, const CfContext& ctx)
    : DigitString(scale, ctx) {
    if (digits.size() != count_ + 1)
        throw RangeError("digit string needs " + std::to_string(count_ + 1) +
                         " digits, got " + std::to_string(digits.size()));
    for (const Int& d : digits)
        if (sgn(d) < 0) throw RangeError("digits must be non-negative");
    overflow_ = std::move(digits.back());
    for (std::size_t j = 0; j < count_; ++j)
        set_digit(static_cast<int>(j) + 1, digits[j]);
}

void DigitString::set_digit(int i, const Int& value) {
    const std::size_t j = static_cast<std::size_t>(i) - 1;
    if (!wide()) {
        if (mpz_fits_ulong_p(value.get_mpz_t())) {
            small_[j] = mpz_get_ui(value.get_mpz_t());
            return;
        }
        // widen: promote everything stored so far
        wide_.assign(count_, Int(0));
        for (std::size_t m = 0; m < count_; ++m) wide_[m] = small_[m];
        small_.clear();
    }
    wide_[j] = value;
}

Int DigitString::digit(int i) const {
    if (i < 1 || i > length())
        throw IndexError("digit index " + std::to_string(i) + " outside [1, " +
                         std::to_string(length()) + "]");
    const std::size_t j = static_cast<std::size_t>(i) - 1;
    if (j == count_) return overflow_;
    if (wide()) return wide_[j];
    Int v;
    mpz_set_ui(v.get_mpz_t(), small_[j]);
    return v;
}

Int DigitString::weighted_sum(std::span<const Int> basis) const {
    if (basis.size() != static_cast<std::size_t>(length()))
        throw RangeError("basis size does not match digit count");
    Int acc(0);
    if (wide()) {
        for (std::size_t j = 0; j < count_; ++j)
            if (wide_[j] != 0)
                mpz_addmul(acc.get_mpz_t(), wide_[j].get_mpz_t(), basis[j].get_mpz_t());
    } else {
        for (std::size_t j = 0; j < count_; ++j)
            if (small_[j] != 0)
                mpz_addmul_ui(acc.get_mpz_t(), basis[j].get_mpz_t(), small_[j]);
    }
    if (overflow_ != 0)
        mpz_addmul(acc.get_mpz_t(), overflow_.get_mpz_t(), basis[count_].get_mpz_t());
    return acc;
}

std::string DigitString::to_csv() const {
    std::string out;
    for (int i = 1; i <= length(); ++i) {
        if (i > 1) out += ',';
        out += digit(i).get_str();
    }
    return out;
}

DigitString DigitString::from_csv(std::string_view text, Scale scale,
                                  const CfContext& ctx) {
    std::vector<Int> digits;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view field = text.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        digits.push_back(parse_integer(field));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return DigitString(scale, std::move(digits), ctx);
}

DigitString ostrowski_encode(const Int& value, const CfContext& ctx) {
    if (value <= 0) throw RangeError("Ostrowski encoding is defined for N >= 1");
    const int n = ctx.quotient_count();
    DigitString ds(Scale::Q, ctx);

    Int tmp = value - 1;
    Int quot;
    mpz_fdiv_qr(ds.overflow_.get_mpz_t(), tmp.get_mpz_t(), tmp.get_mpz_t(),
                ctx.convergent_den(n).get_mpz_t());
    for (int i = n; i >= 1; --i) {
        mpz_fdiv_qr(quot.get_mpz_t(), tmp.get_mpz_t(), tmp.get_mpz_t(),
                    ctx.convergent_den(i - 1).get_mpz_t());
        ds.set_digit(i, quot);
    }
    // q_0 == 1, so the greedy walk always terminates with no residue
    return ds;
}

DigitString theta_encode(const Int& value, const CfContext& ctx) {
    if (ctx.gcd() != 1)
        throw NotInvertibleError(ctx.gcd(),
                                 "theta-scale encoding requires gcd(a, d) = 1, gcd = " +
                                     ctx.gcd().get_str());
    if (sgn(value) < 0 || value >= ctx.modulus())
        throw RangeError("theta-scale encoding is defined for 0 <= b < d");
    const int n = ctx.quotient_count();
    DigitString ds(Scale::Theta, ctx);

    Int rem = value;
    Int quot;
    for (int i = 1; i <= n; ++i) {
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), rem.get_mpz_t(),
                    ctx.remainder(i - 1).get_mpz_t());
        ds.set_digit(i, quot);
    }
    // theta'_{n-1} == 1 absorbs everything; b_{n+1} stays 0
    return ds;
}

Int decode(const DigitString& ds, const CfContext& ctx) {
    if (!ds.bound_to(ctx))
        throw MismatchError("digit string is bound to (" +
                            ds.context_multiplier().get_str() + ", " +
                            ds.context_modulus().get_str() + "), not (" +
                            ctx.multiplier().get_str() + ", " +
                            ctx.modulus().get_str() + ")");
    if (ds.scale() == Scale::Q)
        return Int(1 + ds.weighted_sum(ctx.q_scale_basis()));
    return ds.weighted_sum(ctx.theta_scale_basis());
}

bool validate_markovian(const DigitString& ds, const CfContext& ctx) {
    if (!ds.bound_to(ctx))
        throw MismatchError("digit string is not bound to this context");
    const int n = ctx.quotient_count();
    if (ds.scale() == Scale::Q) {
        if (n >= 1 && ds.digit(1) > ctx.quotient(1) - 1) return false;
        for (int i = 2; i <= n; ++i)
            if (ds.digit(i) > ctx.quotient(i)) return false;
        for (int i = 1; i + 1 <= n; ++i)
            if (ds.digit(i + 1) == ctx.quotient(i + 1) && ds.digit(i) != 0)
                return false;
        return true;
    }
    // Theta scale. Greedy decomposition can reach b_1 == k_1 (e.g. when
    // b = k_1 * a < d), so the first digit shares the general bound.
    for (int i = 1; i <= n; ++i)
        if (ds.digit(i) > ctx.quotient(i)) return false;
    for (int i = 1; i + 1 <= n; ++i)
        if (ds.digit(i) == ctx.quotient(i) && ds.digit(i + 1) != 0) return false;
    return ds.overflow_digit() == 0;
}

}  // namespace cfmod
