#pragma once

#include <cstdint>
#include <string>

#include "hm/cyclotomic.hpp"
#include "hm/rational.hpp"

namespace hm {

/// Default modulus for randomized cross-checks: prime, > 2^16, = 1 mod 5 so
/// that zeta_5 embeds.
inline constexpr std::uint64_t kDefaultCheckPrime = 1000081;

/// Element of F_p with the (odd, word-sized) modulus carried alongside.
/// Small integer literals constructed without a modulus stay "unbound" until
/// they meet a bound value; this lets field-generic code write K(0), K(1).
class Fp {
public:
    Fp() : raw_(0), p_(0) {}
    Fp(long v) : raw_(v), p_(0) {} // NOLINT: implicit literal
    Fp(std::uint64_t value, std::uint64_t p) : raw_(static_cast<std::int64_t>(value % p)), p_(p) {}

    static Fp from_int(long long n, std::uint64_t p) {
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    bool bound() const { return p_ != 0; }
    std::uint64_t value() const { return bound() ? static_cast<std::uint64_t>(raw_) : 0; }
    std::uint64_t modulus() const { return p_; }

    Fp bind(std::uint64_t p) const { return bound() ? *this : from_int(raw_, p); }

    bool is_zero() const { return raw_ == 0; }

    Fp operator-() const {
        if (!bound()) return Fp(-raw_);
        return Fp(raw_ == 0 ? 0 : p_ - static_cast<std::uint64_t>(raw_), p_);
    }
    friend Fp operator+(const Fp& a, const Fp& b) {
        auto [x, y] = align(a, b);
        if (!x.bound()) return Fp(x.raw_ + y.raw_);
        std::uint64_t s = static_cast<std::uint64_t>(x.raw_) + static_cast<std::uint64_t>(y.raw_);
        if (s >= x.p_) s -= x.p_;
        return Fp(s, x.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
    friend Fp operator*(const Fp& a, const Fp& b) {
        auto [x, y] = align(a, b);
        if (!x.bound()) return Fp(x.raw_ * y.raw_);
        return Fp(static_cast<std::uint64_t>((static_cast<unsigned __int128>(x.raw_) * static_cast<std::uint64_t>(y.raw_)) % x.p_),
                  x.p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) {
        auto [x, y] = align(a, b);
        if (!x.bound()) {
            if (y.raw_ == 0) throw ValidationError("division by zero mod p");
            if (x.raw_ % y.raw_ == 0) return Fp(x.raw_ / y.raw_);
            throw InternalError("division of unbound prime-field literals");
        }
        return x * y.inverse();
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }
    friend bool operator==(const Fp& a, const Fp& b) {
        auto [x, y] = align(a, b);
        return x.raw_ == y.raw_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp pow(std::uint64_t e) const {
        if (!bound()) throw InternalError("pow of unbound prime-field literal");
        Fp base = *this, out(1, p_);
        while (e) {
            if (e & 1) out *= base;
            base *= base;
            e >>= 1;
        }
        return out;
    }

    Fp inverse() const {
        if (!bound()) throw InternalError("inverse of unbound prime-field literal");
        if (raw_ == 0) throw ValidationError("inverse of zero mod p");
        return pow(p_ - 2);
    }

    std::string str() const { return std::to_string(raw_); }

private:
    static std::pair<Fp, Fp> align(const Fp& a, const Fp& b) {
        if (a.bound() == b.bound()) {
            if (a.bound() && a.p_ != b.p_) throw InternalError("mixed prime-field moduli");
            return {a, b};
        }
        if (a.bound()) return {a, b.bind(a.p_)};
        return {a.bind(b.p_), b};
    }

    std::int64_t raw_; // value in [0,p) when bound, plain integer otherwise
    std::uint64_t p_;  // 0 = unbound literal
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline Fp inverse(const Fp& x) { return x.inverse(); }
inline std::string to_string(const Fp& x) { return x.str(); }

/// Ring-homomorphic image of a rational; throws if the denominator vanishes mod p.
inline Fp embed_to_prime_field(const Rational& x, std::uint64_t p) {
    BigInt num = x.numerator() % BigInt(static_cast<unsigned long>(p));
    BigInt den = x.denominator() % BigInt(static_cast<unsigned long>(p));
    if (den == 0) throw ValidationError("denominator not invertible mod p");
    return Fp::from_int(num.get_si(), p) / Fp::from_int(den.get_si(), p);
}

/// Image of a cyclotomic scalar under zeta -> zeta_image.
inline Fp embed_to_prime_field(const Cyclotomic& x, const Fp& zeta_image) {
    std::uint64_t p = zeta_image.modulus();
    if (zeta_image.pow(5) != Fp(1, p) || zeta_image == Fp(1, p))
        throw ValidationError("zeta image is not a primitive 5th root of unity mod p");
    Fp out(0, p), zk(1, p);
    for (int i = 0; i < 4; ++i) {
        out += embed_to_prime_field(x.coeff(i), p) * zk;
        zk *= zeta_image;
    }
    return out;
}

/// A primitive 5th root of unity mod p (requires p = 1 mod 5).
inline Fp primitive_fifth_root(std::uint64_t p) {
    if (p % 5 != 1) throw ValidationError("prime is not 1 mod 5, zeta does not embed");
    for (std::uint64_t g = 2; g < p; ++g) {
        Fp x = Fp(g, p).pow((p - 1) / 5);
        if (x != Fp(1, p)) {
            if (x.pow(5) != Fp(1, p)) throw InternalError("bad fifth root candidate");
            return x;
        }
    }
    throw InternalError("no primitive fifth root found");
}

} // namespace hm
