#include "cfmod/bigint.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include "cfmod/errors.hpp"

namespace cfmod {

namespace {

bool valid_digits(std::string_view digits, int base) {
    if (digits.empty()) return false;
    for (char c : digits) {
        if (base == 10) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        } else {
            if (!std::isxdigit(static_cast<unsigned char>(c))) return false;
        }
    }
    return true;
}

}  // namespace

Int parse_integer(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    int base = 10;
    if (rest.size() > 2 && rest[0] == '0' && (rest[1] == 'x' || rest[1] == 'X')) {
        base = 16;
        rest.remove_prefix(2);
    }
    if (!valid_digits(rest, base))
        throw ParseError("malformed integer: \"" + std::string(text) + "\"");
    Int value;
    if (mpz_set_str(value.get_mpz_t(), std::string(rest).c_str(), base) != 0)
        throw ParseError("malformed integer: \"" + std::string(text) + "\"");
    if (negative) mpz_neg(value.get_mpz_t(), value.get_mpz_t());
    return value;
}

std::string to_decimal(const Int& value) {
    return value.get_str();
}

double log_int(const Int& value) {
    if (value <= 0) throw RangeError("log_int requires a positive argument");
    signed long exp = 0;
    double mant = mpz_get_d_2exp(&exp, value.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::numbers::ln2;
}

}  // namespace cfmod
