#pragma once

#include <array>
#include <string>
#include <vector>

#include "hm/rational.hpp"

namespace hm {

/// Element of Q(zeta_5), stored as c0 + c1 z + c2 z^2 + c3 z^3 reduced modulo
/// Phi_5(z) = 1 + z + z^2 + z^3 + z^4.
class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(long n) { c_[0] = Rational(n); } // NOLINT: implicit by design
    Cyclotomic(Rational r) { c_[0] = std::move(r); } // NOLINT
    Cyclotomic(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    /// zeta^k, reduced (zeta^4 = -1 - z - z^2 - z^3).
    static Cyclotomic zeta(long k = 1) {
        k %= 5;
        if (k < 0) k += 5;
        if (k == 0) return Cyclotomic(1);
        Cyclotomic out;
        if (k == 4) {
            for (auto& c : out.c_) c = Rational(-1);
        } else {
            out.c_[static_cast<size_t>(k)] = Rational(1);
        }
        return out;
    }

    /// sqrt(5) = zeta - zeta^2 - zeta^3 + zeta^4.
    static Cyclotomic sqrt5() { return Cyclotomic(-1, 0, -2, -2); }

    const Rational& coeff(int i) const { return c_.at(static_cast<size_t>(i)); }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    const Rational& rational_part() const { return c_[0]; }

    Cyclotomic operator-() const {
        Cyclotomic out;
        for (size_t i = 0; i < 4; ++i) out.c_[i] = -c_[i];
        return out;
    }
    Cyclotomic& operator+=(const Cyclotomic& o) {
        for (size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        for (size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this * o.inverse(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return a.c_ != b.c_; }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        std::array<Rational, 7> raw;
        for (size_t i = 0; i < 4; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < 4; ++j) raw[i + j] += a.c_[i] * b.c_[j];
        }
        // z^4 = -(1+z+z^2+z^3), z^5 = 1, z^6 = z
        Cyclotomic out(raw[0], raw[1], raw[2], raw[3]);
        if (!raw[4].is_zero())
            for (size_t i = 0; i < 4; ++i) out.c_[i] -= raw[4];
        out.c_[0] += raw[5];
        out.c_[1] += raw[6];
        return out;
    }

    /// Multiplicative inverse via extended Euclid against Phi_5 over Q[z].
    Cyclotomic inverse() const;

    /// Galois conjugate z -> z^k.
    Cyclotomic conjugate(long k) const {
        Cyclotomic out(c_[0]);
        for (long i = 1; i <= 3; ++i) {
            Cyclotomic zi = zeta(i * k);
            for (size_t j = 0; j < 4; ++j) out.c_[j] += c_[static_cast<size_t>(i)] * zi.c_[j];
        }
        return out;
    }

    /// Polynomial literal in z, e.g. "1-2*z^3" or "z".
    std::string str() const;
    static Cyclotomic parse(const std::string& text);

private:
    std::array<Rational, 4> c_{};
};

inline Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw ValidationError("inverse of zero cyclotomic");
    // Extended Euclid for r0 = Phi_5, r1 = this (as vectors low->high).
    auto trim = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    std::vector<Rational> r0 = {1, 1, 1, 1, 1};
    std::vector<Rational> r1 = {c_[0], c_[1], c_[2], c_[3]};
    trim(r1);
    std::vector<Rational> t0 = {}, t1 = {Rational(1)};
    while (true) {
        // divide r0 by r1
        std::vector<Rational> q(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1);
        std::vector<Rational> rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational f = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] = f;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= f * r1[i];
            trim(rem);
        }
        // t2 = t0 - q*t1
        std::vector<Rational> t2 = t0;
        t2.resize(std::max(t0.size(), q.size() + t1.size()));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (size_t j = 0; j < t1.size(); ++j) t2[i + j] -= q[i] * t1[j];
        }
        trim(t2);
        if (rem.empty()) {
            // r1 is the gcd, a nonzero constant (Phi_5 is irreducible)
            Cyclotomic out;
            Rational lead = r1.at(0);
            for (size_t i = 0; i < t1.size() && i < 4; ++i) out.c_[i] = t1[i] / lead;
            return out;
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
}

inline std::string Cyclotomic::str() const {
    std::string out;
    for (int i = 0; i < 4; ++i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        std::string term;
        Rational a = c.abs();
        if (i == 0) {
            term = a.str();
        } else {
            std::string zpart = (i == 1) ? "z" : "z^" + std::to_string(i);
            term = a.is_one() ? zpart : a.str() + "*" + zpart;
        }
        if (out.empty())
            out = (c.sign() < 0 ? "-" : "") + term;
        else
            out += (c.sign() < 0 ? "-" : "+") + term;
    }
    return out.empty() ? "0" : out;
}

inline Cyclotomic Cyclotomic::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s += ch;
    if (s.empty()) throw ValidationError("empty cyclotomic literal");
    Cyclotomic out;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= s.size()) throw ValidationError("bad cyclotomic literal '" + text + "'");
        size_t start = i;
        while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
        std::string term = s.substr(start, i - start);
        // term: [coeff][*]?[z[^k]]
        Rational coeff(1);
        long power = 0;
        auto zpos = term.find('z');
        if (zpos == std::string::npos) {
            coeff = Rational::parse(term);
        } else {
            std::string cpart = term.substr(0, zpos);
            if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
            if (!cpart.empty()) coeff = Rational::parse(cpart);
            power = 1;
            std::string rest = term.substr(zpos + 1);
            if (!rest.empty()) {
                if (rest[0] != '^') throw ValidationError("bad cyclotomic literal '" + text + "'");
                std::string exp = rest.substr(1);
                if (exp.empty()) throw ValidationError("bad cyclotomic literal '" + text + "'");
                for (char ch : exp)
                    if (ch < '0' || ch > '9') throw ValidationError("bad cyclotomic literal '" + text + "'");
                power = std::stol(exp);
            }
        }
        Cyclotomic t = zeta(power);
        t *= Cyclotomic(coeff * Rational(sign));
        out += t;
    }
    return out;
}

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline Cyclotomic inverse(const Cyclotomic& x) { return x.inverse(); }
inline std::string to_string(const Cyclotomic& x) { return x.str(); }

} // namespace hm
