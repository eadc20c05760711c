#pragma once

#include <cstdint>

#include "hm/rational.hpp"

namespace hm {

/// Deterministic splitmix64 generator; identical sequences on every platform,
/// unlike the standard distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    /// Uniform in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Rational rational(long max_abs_num, long max_den) {
        long d = range(1, max_den);
        return Rational(range(-max_abs_num, max_abs_num), d);
    }

    /// Small nonzero integer-valued rational.
    Rational nonzero_int(long max_abs) {
        long v = 0;
        while (v == 0) v = range(-max_abs, max_abs);
        return Rational(v);
    }

    Rng fork() { return Rng(next()); }

private:
    std::uint64_t s_;
};

} // namespace hm
