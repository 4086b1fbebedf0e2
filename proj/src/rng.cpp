#include "cfmod/rng.hpp"

#include "cfmod/errors.hpp"

namespace cfmod {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) : gen_(gmp_randinit_mt) {
    Int s;
    mpz_import(s.get_mpz_t(), 1, 1, sizeof(seed), 0, 0, &seed);
    gen_.seed(s);
}

Rng Rng::worker_stream(std::uint64_t seed, unsigned worker) {
    std::uint64_t state = seed;
    std::uint64_t derived = 0;
    for (unsigned i = 0; i <= worker; ++i) derived = splitmix64(state);
    return Rng(derived);
}

Int Rng::below(const Int& bound) {
    if (sgn(bound) <= 0) throw RangeError("random bound must be positive");
    const auto bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    while (true) {
        Int x = gen_.get_z_bits(static_cast<unsigned long>(bits));
        if (x < bound) return x;
    }
}

Int Rng::in_range(const Int& lo, const Int& hi) {
    if (lo > hi) throw RangeError("empty random range");
    return Int(lo + below(Int(hi - lo + 1)));
}

Int Rng::with_bits(unsigned bits) {
    if (bits == 0) throw RangeError("bit count must be positive");
    if (bits == 1) return Int(1);
    Int top(1);
    mpz_mul_2exp(top.get_mpz_t(), top.get_mpz_t(), bits - 1);
    return Int(top + below(top));
}

}  // namespace cfmod
