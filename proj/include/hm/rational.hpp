#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hm/errors.hpp"

namespace hm {

using BigInt = mpz_class;

/// Arbitrary-precision rational number, kept reduced with positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design, scalars mix with literals
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw ValidationError("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(const BigInt& n, const BigInt& d) : v_(n, d) {
        if (d == 0) throw ValidationError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ValidationError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw ValidationError("inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// "n" or "n/d".
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// Parses "n", "n/d", optional sign, no embedded whitespace.
    static Rational parse(const std::string& text);

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw ValidationError("empty rational literal");
    auto slash = text.find('/');
    auto check_int = [&](const std::string& s) {
        if (s.empty()) throw ValidationError("bad rational literal '" + text + "'");
        size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw ValidationError("bad rational literal '" + text + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw ValidationError("bad rational literal '" + text + "'");
    };
    if (slash == std::string::npos) {
        check_int(text);
        return Rational(mpq_class(BigInt(text)));
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    BigInt d(den);
    if (d == 0) throw ValidationError("rational with zero denominator: '" + text + "'");
    return Rational(BigInt(num), d);
}

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline Rational inverse(const Rational& x) { return x.inverse(); }
inline std::string to_string(const Rational& x) { return x.str(); }

} // namespace hm
