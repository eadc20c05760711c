#pragma once

#include <utility>
#include <vector>

#include "hm/cyclotomic.hpp"
#include "hm/poly.hpp"

namespace hm {

namespace detail {

/// Divisors of |n|, from trial division up to a fixed bound; if an unfactored
/// cofactor remains it participates as a single block, so divisors with a
/// large prime factor split across two large primes can be missed. Root
/// finding stays sound (every reported root is verified); completeness is
/// only up to this factoring bound.
inline std::vector<BigInt> divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<std::pair<BigInt, int>> fac;
    BigInt d(2);
    const BigInt bound(1000000);
    while (n > 1 && d <= bound && d * d <= n) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            fac.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1) fac.emplace_back(n, 1);
    std::vector<BigInt> out{BigInt(1)};
    for (const auto& [p, e] : fac) {
        size_t base = out.size();
        BigInt pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
        if (out.size() > 4096) break; // keep candidate sets sane
    }
    return out;
}

} // namespace detail

/// All rational roots with multiplicities, by the rational root theorem on the
/// primitive integer form plus deflation.
inline std::vector<std::pair<Rational, int>> rational_roots(const UniPoly<Rational>& f) {
    std::vector<std::pair<Rational, int>> out;
    if (f.is_zero() || f.degree() == 0) return out;
    UniPoly<Rational> g = f;
    // root at zero
    int zmult = 0;
    while (g.degree() >= 1 && g.coeff(0).is_zero()) {
        std::vector<Rational> c(g.coeffs().begin() + 1, g.coeffs().end());
        g = UniPoly<Rational>(std::move(c));
        ++zmult;
    }
    if (zmult > 0) out.emplace_back(Rational(0), zmult);
    if (g.degree() < 1) return out;
    auto z = detail::primitive_int(g);
    std::vector<BigInt> ps = detail::divisors(z.front());
    std::vector<BigInt> qs = detail::divisors(z.back());
    for (const auto& p : ps) {
        for (const auto& q : qs) {
            for (int sign = 0; sign < 2; ++sign) {
                Rational cand(sign ? -p : p, q);
                if (!g.eval(cand).is_zero()) continue;
                int mult = 0;
                UniPoly<Rational> lin({-cand, Rational(1)});
                while (true) {
                    auto [quo, rem] = g.divmod(lin);
                    if (!rem.is_zero()) break;
                    g = quo;
                    ++mult;
                }
                if (mult > 0) out.emplace_back(cand, mult);
                if (g.degree() < 1) return out;
            }
        }
    }
    return out;
}

/// Roots in Q(zeta_5). Complete for linear factors; for polynomials with
/// rational coefficients it additionally resolves roots of the form
/// (u + v sqrt(5)) via the quadratic discriminant test. Deeper factorization
/// over the cyclotomic field is out of scope.
inline std::vector<std::pair<Cyclotomic, int>> cyclotomic_roots(const UniPoly<Cyclotomic>& f) {
    std::vector<std::pair<Cyclotomic, int>> out;
    if (f.is_zero() || f.degree() == 0) return out;

    auto multiplicity_of = [&](const Cyclotomic& root) {
        UniPoly<Cyclotomic> g = f;
        UniPoly<Cyclotomic> lin({-root, Cyclotomic(1)});
        int mult = 0;
        while (true) {
            auto [quo, rem] = g.divmod(lin);
            if (!rem.is_zero()) break;
            g = quo;
            ++mult;
        }
        return mult;
    };
    auto push = [&](const Cyclotomic& root) {
        for (const auto& [r, m] : out)
            if (r == root) return;
        int m = multiplicity_of(root);
        if (m > 0) out.emplace_back(root, m);
    };

    bool rational_coeffs = true;
    for (const auto& c : f.coeffs())
        if (!c.is_rational()) {
            rational_coeffs = false;
            break;
        }
    if (rational_coeffs) {
        std::vector<Rational> rc;
        rc.reserve(f.coeffs().size());
        for (const auto& c : f.coeffs()) rc.push_back(c.rational_part());
        UniPoly<Rational> fr(std::move(rc));
        for (const auto& [r, m] : rational_roots(fr)) {
            out.emplace_back(Cyclotomic(r), m);
            UniPoly<Rational> lin({-r, Rational(1)});
            for (int k = 0; k < m; ++k) fr = fr.divmod(lin).first;
        }
        // one surviving quadratic factor: try roots in Q(sqrt 5)
        if (fr.degree() == 2) {
            Rational a = fr.coeff(2), b = fr.coeff(1), c = fr.coeff(0);
            Rational disc = b * b - Rational(4) * a * c;
            auto rational_sqrt = [](const Rational& v) -> std::optional<Rational> {
                if (v.sign() < 0) return std::nullopt;
                BigInt n = v.numerator(), d = v.denominator();
                BigInt rn = sqrt(n), rd = sqrt(d);
                if (rn * rn == n && rd * rd == d) return Rational(rn, rd);
                return std::nullopt;
            };
            if (auto r5 = rational_sqrt(disc / Rational(5))) {
                Cyclotomic sq = Cyclotomic(*r5) * Cyclotomic::sqrt5();
                Cyclotomic inv2a = Cyclotomic(Rational(1) / (Rational(2) * a));
                push((Cyclotomic(-b) + sq) * inv2a);
                push((Cyclotomic(-b) - sq) * inv2a);
            }
        }
        return out;
    }

    // general coefficients: peel linear factors of the squarefree part
    UniPoly<Cyclotomic> sf = squarefree_part(f);
    if (sf.degree() == 1) push(-sf.coeff(0) / sf.coeff(1));
    // also try linear factors exposed by dividing out discovered roots
    UniPoly<Cyclotomic> g = f;
    bool progress = true;
    while (progress && g.degree() >= 1) {
        progress = false;
        UniPoly<Cyclotomic> s = squarefree_part(g);
        if (s.degree() == 1) {
            Cyclotomic root = -s.coeff(0) / s.coeff(1);
            push(root);
            UniPoly<Cyclotomic> lin({-root, Cyclotomic(1)});
            while (true) {
                auto [quo, rem] = g.divmod(lin);
                if (!rem.is_zero()) break;
                g = quo;
            }
            progress = true;
        }
    }
    return out;
}

inline std::vector<std::pair<Rational, int>> roots_in_field(const UniPoly<Rational>& f) {
    return rational_roots(f);
}
inline std::vector<std::pair<Cyclotomic, int>> roots_in_field(const UniPoly<Cyclotomic>& f) {
    return cyclotomic_roots(f);
}

/// Projective roots (s:t) of a binary form found in the base field, with
/// multiplicities: (1:0), (0:1) from the power structure, (1:alpha) from the
/// dehomogenized core.
template <class K>
std::vector<std::pair<std::pair<K, K>, int>> binary_roots_in_field(const BinaryForm<K>& f) {
    std::vector<std::pair<std::pair<K, K>, int>> out;
    if (f.is_zero()) return out;
    int tp = f.t_power(), sp = f.s_power();
    if (tp > 0) out.push_back({{K(1), K(0)}, tp});
    if (sp > 0) out.push_back({{K(0), K(1)}, sp});
    std::vector<K> core(f.coeffs().begin() + tp, f.coeffs().end() - sp);
    UniPoly<K> p(std::move(core));
    for (const auto& [r, m] : roots_in_field(p))
        if (!is_zero(r)) out.push_back({{K(1), r}, m});
    return out;
}

} // namespace hm
