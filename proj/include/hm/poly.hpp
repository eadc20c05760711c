#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "hm/matrix.hpp"
#include "hm/rational.hpp"

namespace hm {

/// Dense univariate polynomial over K, coefficients low to high, trailing
/// zeros trimmed. The zero polynomial has an empty coefficient vector.
template <class K>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(K v) { return UniPoly(std::vector<K>{std::move(v)}); }
    static UniPoly monomial(K v, int power) {
        std::vector<K> c(static_cast<size_t>(power) + 1);
        c.back() = std::move(v);
        return UniPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : K(0);
    }
    K lead() const { return c_.empty() ? K(0) : c_.back(); }

    K eval(const K& x) const {
        K out(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x + *it;
        return out;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<K> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * K(static_cast<long>(i));
        return UniPoly(std::move(d));
    }

    UniPoly operator-() const {
        std::vector<K> d(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
        return UniPoly(std::move(d));
    }
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<K> d(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < d.size(); ++i) d[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return UniPoly(std::move(d));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<K> d(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (scalar_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(d));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Quotient-and-remainder over a field; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw ValidationError("polynomial division by zero");
        UniPoly rem = *this;
        if (rem.degree() < d.degree()) return {UniPoly(), rem};
        std::vector<K> q(static_cast<size_t>(rem.degree() - d.degree()) + 1);
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            K f = rem.lead() / d.lead();
            int shift = rem.degree() - d.degree();
            q[static_cast<size_t>(shift)] = f;
            std::vector<K> rc = rem.c_;
            for (size_t i = 0; i < d.c_.size(); ++i) rc[static_cast<size_t>(shift) + i] -= f * d.c_[i];
            rem = UniPoly(std::move(rc));
        }
        return {UniPoly(std::move(q)), rem};
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        K inv = K(1) / lead();
        std::vector<K> d(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * inv;
        return UniPoly(std::move(d));
    }

    UniPoly scaled(const K& f) const {
        std::vector<K> d(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * f;
        return UniPoly(std::move(d));
    }

    /// Lagrange interpolation through (x_i, y_i); x_i must be distinct.
    static UniPoly interpolate(const std::vector<K>& xs, const std::vector<K>& ys) {
        UniPoly out;
        for (size_t i = 0; i < xs.size(); ++i) {
            UniPoly basis = UniPoly::constant(K(1));
            K den(1);
            for (size_t j = 0; j < xs.size(); ++j) {
                if (i == j) continue;
                basis = basis * UniPoly({-xs[j], K(1)});
                den = den * (xs[i] - xs[j]);
            }
            out = out + basis.scaled(ys[i] / den);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

namespace detail {

/// Primitive integer form of a rational polynomial: positive-leading integer
/// coefficient vector with content 1, plus positivity of the lead.
inline std::vector<BigInt> primitive_int(const UniPoly<Rational>& f) {
    BigInt den(1);
    for (const auto& c : f.coeffs()) {
        BigInt d = c.denominator();
        den = den / gcd(den, d) * d;
    }
    std::vector<BigInt> z;
    z.reserve(f.coeffs().size());
    BigInt content(0);
    for (const auto& c : f.coeffs()) {
        BigInt v = c.numerator() * (den / c.denominator());
        content = gcd(content, v);
        z.push_back(v);
    }
    if (content == 0) return {};
    if (z.back() < 0) content = -content;
    for (auto& v : z) v /= content;
    return z;
}

inline UniPoly<Rational> from_int(const std::vector<BigInt>& z) {
    std::vector<Rational> c;
    c.reserve(z.size());
    for (const auto& v : z) c.emplace_back(v, BigInt(1));
    return UniPoly<Rational>(std::move(c));
}

/// Pseudo-remainder of primitive integer polynomials, returned primitive.
inline std::vector<BigInt> prim_prem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        BigInt la = a.back(), lb = b.back();
        BigInt g = gcd(la, lb);
        BigInt fa = lb / g, fb = la / g;
        size_t shift = a.size() - b.size();
        for (auto& v : a) v *= fa;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= fb * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    if (a.empty()) return a;
    BigInt content(0);
    for (const auto& v : a) content = gcd(content, v);
    if (a.back() < 0) content = -content;
    for (auto& v : a) v /= content;
    return a;
}

} // namespace detail

/// GCD over a field by monic Euclid; result is monic (or zero).
template <class K>
UniPoly<K> poly_gcd(UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero()) {
        UniPoly<K> r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Over Q: primitive-part Euclid on integer coefficient vectors, which keeps
/// the intermediate integers small. Result is monic.
inline UniPoly<Rational> poly_gcd(const UniPoly<Rational>& a, const UniPoly<Rational>& b) {
    std::vector<BigInt> x = detail::primitive_int(a), y = detail::primitive_int(b);
    if (x.empty()) return detail::from_int(y).monic();
    if (y.empty()) return detail::from_int(x).monic();
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        std::vector<BigInt> r = detail::prim_prem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return detail::from_int(x).monic();
}

/// f / gcd(f, f'): same roots, all simple. Monic normalization.
template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& f) {
    if (f.is_zero()) return f;
    UniPoly<K> g = poly_gcd(f, f.derivative());
    if (g.degree() <= 0) return f.monic();
    auto [q, r] = f.divmod(g);
    if (!r.is_zero()) throw InternalError("squarefree division not exact");
    return q.monic();
}

/// Homogeneous binary form of fixed degree d in (s, t); coefficient k belongs
/// to s^(d-k) t^k. Leading/trailing zero coefficients encode roots at (0:1)
/// and (1:0) and are kept.
template <class K>
class BinaryForm {
public:
    BinaryForm() : c_(1) {} // zero form of degree 0
    explicit BinaryForm(std::vector<K> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.resize(1);
    }
    static BinaryForm from_poly(const UniPoly<K>& p, int degree) {
        std::vector<K> c(static_cast<size_t>(degree) + 1);
        for (int i = 0; i <= p.degree(); ++i) c[static_cast<size_t>(i)] = p.coeff(i);
        return BinaryForm(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const { return c_.at(static_cast<size_t>(i)); }
    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const K& v) { return scalar_is_zero(v); });
    }

    K eval(const K& s, const K& t) const {
        K out(0);
        std::vector<K> spow(c_.size()), tpow(c_.size());
        K tp(1), sp(1);
        for (size_t i = 0; i < c_.size(); ++i) {
            tpow[i] = tp;
            tp = tp * t;
        }
        for (size_t i = c_.size(); i-- > 0;) {
            spow[i] = sp;
            sp = sp * s;
        }
        for (size_t i = 0; i < c_.size(); ++i)
            if (!scalar_is_zero(c_[i])) out += c_[i] * spow[i] * tpow[i];
        return out;
    }

    /// p(t) = f(1, t).
    UniPoly<K> dehomogenized() const { return UniPoly<K>(c_); }

    /// Multiplicity of t (index-0 zeros) and of s (top zeros).
    int t_power() const {
        int k = 0;
        while (k < static_cast<int>(c_.size()) && scalar_is_zero(c_[static_cast<size_t>(k)])) ++k;
        return k == static_cast<int>(c_.size()) ? 0 : k;
    }
    int s_power() const {
        int k = 0;
        while (k < static_cast<int>(c_.size()) && scalar_is_zero(c_[c_.size() - 1 - static_cast<size_t>(k)])) ++k;
        return k == static_cast<int>(c_.size()) ? 0 : k;
    }

    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        std::vector<K> d(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
        return BinaryForm(std::move(d));
    }
    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
        if (a.degree() != b.degree()) throw std::invalid_argument("binary form degree mismatch");
        std::vector<K> d(a.c_.size());
        for (size_t i = 0; i < d.size(); ++i) d[i] = a.c_[i] + b.c_[i];
        return BinaryForm(std::move(d));
    }
    BinaryForm scaled(const K& f) const {
        std::vector<K> d(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * f;
        return BinaryForm(std::move(d));
    }

private:
    std::vector<K> c_;
};

/// GCD of binary forms: common s- and t-powers times the homogenization of the
/// core gcd. Monic in its top nonzero coefficient.
template <class K>
BinaryForm<K> binary_gcd(const BinaryForm<K>& a, const BinaryForm<K>& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int ta = a.t_power(), tb = b.t_power();
    int sa = a.s_power(), sb = b.s_power();
    auto core = [](const BinaryForm<K>& f, int tp, int sp) {
        std::vector<K> c(f.coeffs().begin() + tp, f.coeffs().end() - sp);
        return UniPoly<K>(std::move(c));
    };
    UniPoly<K> g = poly_gcd(core(a, ta, sa), core(b, tb, sb));
    int tmin = std::min(ta, tb), smin = std::min(sa, sb);
    std::vector<K> out(static_cast<size_t>(tmin + g.degree() + smin) + 1);
    for (int i = 0; i <= g.degree(); ++i) out[static_cast<size_t>(tmin + i)] = g.coeff(i);
    return BinaryForm<K>(std::move(out));
}

/// Projective degree of the root locus: degree minus the corank coming from
/// an identically-zero form is not defined, caller must check is_zero first.
template <class K>
int binary_root_count(const BinaryForm<K>& f) {
    return f.degree();
}

/// Determinant of a square matrix with entries homogeneous-linear in (s, t),
/// by evaluation at degree+1 parameter values and interpolation. Returns the
/// determinant as a binary form of degree n.
template <class K>
BinaryForm<K> interp_det(const std::vector<std::vector<BinaryForm<K>>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return BinaryForm<K>::from_poly(UniPoly<K>::constant(K(1)), 0);
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("interp_det needs a square matrix");
        for (const auto& e : row)
            if (e.degree() > 1) throw std::invalid_argument("interp_det entries must have degree <= 1");
    }
    std::vector<K> xs, ys;
    xs.reserve(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        K t(static_cast<long>(k));
        Matrix<K> num(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) num(i, j) = m[static_cast<size_t>(i)][static_cast<size_t>(j)].eval(K(1), t);
        xs.push_back(t);
        ys.push_back(det(num));
    }
    return BinaryForm<K>::from_poly(UniPoly<K>::interpolate(xs, ys), n);
}

/// Affine bivariate polynomial, dense grid c[i][j] x^i y^j.
template <class K>
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<std::vector<K>> grid) : c_(std::move(grid)) { trim(); }
    static BiPoly constant(K v) { return BiPoly({{std::move(v)}}); }
    /// c * x^i y^j
    static BiPoly term(K c, int i, int j) {
        std::vector<std::vector<K>> g(static_cast<size_t>(i) + 1,
                                      std::vector<K>(static_cast<size_t>(j) + 1));
        g.back().back() = std::move(c);
        return BiPoly(std::move(g));
    }

    bool is_zero() const { return c_.empty(); }
    int deg_x() const { return static_cast<int>(c_.size()) - 1; }
    int deg_y() const {
        int d = -1;
        for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < c_[i].size(); ++j)
                if (!scalar_is_zero(c_[i][j])) d = std::max(d, static_cast<int>(i + j));
        return d;
    }
    K coeff(int i, int j) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
        const auto& row = c_[static_cast<size_t>(i)];
        if (j < 0 || j >= static_cast<int>(row.size())) return K(0);
        return row[static_cast<size_t>(j)];
    }

    K eval(const K& x, const K& y) const {
        K out(0);
        for (size_t i = 0; i < c_.size(); ++i) {
            K row(0), yp(1);
            for (size_t j = 0; j < c_[i].size(); ++j) {
                row += c_[i][j] * yp;
                yp = yp * y;
            }
            K xp(1);
            for (size_t k = 0; k < i; ++k) xp = xp * x;
            out += row * xp;
        }
        return out;
    }

    /// Coefficients as polynomials in x of the powers of y (nominal degree dy).
    std::vector<UniPoly<K>> y_coefficients(int dy) const {
        std::vector<UniPoly<K>> out;
        out.reserve(static_cast<size_t>(dy) + 1);
        for (int j = 0; j <= dy; ++j) {
            std::vector<K> col(c_.size());
            for (size_t i = 0; i < c_.size(); ++i) col[i] = coeff(static_cast<int>(i), j);
            out.emplace_back(std::move(col));
        }
        return out;
    }

    BiPoly swap_vars() const {
        std::vector<std::vector<K>> g(static_cast<size_t>(deg_y()) + 1,
                                      std::vector<K>(static_cast<size_t>(deg_x()) + 1));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < c_[i].size(); ++j) g[j][i] = c_[i][j];
        return BiPoly(std::move(g));
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        std::vector<std::vector<K>> g(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < g.size(); ++i) {
            size_t w = 0;
            if (i < a.c_.size()) w = std::max(w, a.c_[i].size());
            if (i < b.c_.size()) w = std::max(w, b.c_[i].size());
            g[i].resize(w);
            for (size_t j = 0; j < w; ++j)
                g[i][j] = a.coeff(static_cast<int>(i), static_cast<int>(j)) + b.coeff(static_cast<int>(i), static_cast<int>(j));
        }
        return BiPoly(std::move(g));
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        if (a.is_zero() || b.is_zero()) return BiPoly();
        std::vector<std::vector<K>> g(a.c_.size() + b.c_.size() - 1);
        size_t wa = 0, wb = 0;
        for (const auto& r : a.c_) wa = std::max(wa, r.size());
        for (const auto& r : b.c_) wb = std::max(wb, r.size());
        for (auto& row : g) row.resize(wa + wb - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < a.c_[i].size(); ++j) {
                if (scalar_is_zero(a.c_[i][j])) continue;
                for (size_t k = 0; k < b.c_.size(); ++k)
                    for (size_t l = 0; l < b.c_[k].size(); ++l) g[i + k][j + l] += a.c_[i][j] * b.c_[k][l];
            }
        return BiPoly(std::move(g));
    }
    BiPoly scaled(const K& f) const {
        auto g = c_;
        for (auto& row : g)
            for (auto& v : row) v = v * f;
        return BiPoly(std::move(g));
    }

private:
    void trim() {
        for (auto& row : c_)
            while (!row.empty() && scalar_is_zero(row.back())) row.pop_back();
        while (!c_.empty() && c_.back().empty()) c_.pop_back();
        if (std::all_of(c_.begin(), c_.end(), [](const auto& r) { return r.empty(); })) c_.clear();
    }
    std::vector<std::vector<K>> c_;
};

template <class K>
struct ResultantResult {
    UniPoly<K> value;
    bool identically_zero = false;
};

/// Sylvester resultant eliminating y, with the Sylvester structure fixed at
/// the nominal y-degrees of f and g (so leading-coefficient vanishing at
/// evaluation points cannot corrupt the interpolation). An identically-zero
/// resultant is flagged, not an error: it signals a shared component or
/// leading-structure degeneration.
template <class K>
ResultantResult<K> resultant_y(const BiPoly<K>& f, const BiPoly<K>& g) {
    if (f.is_zero() || g.is_zero()) throw ValidationError("resultant of zero polynomial");
    const int df = f.deg_y(), dg = g.deg_y();
    if (df == 0 && dg == 0) return {UniPoly<K>::constant(K(1)), false};
    auto fc = f.y_coefficients(df);
    auto gc = g.y_coefficients(dg);
    const int n = df + dg;
    // degree bound of the resultant in x
    const int bound = df * std::max(0, g.deg_x()) + dg * std::max(0, f.deg_x());
    std::vector<K> xs, ys;
    for (int k = 0; k <= bound; ++k) {
        K x(static_cast<long>(k));
        Matrix<K> s(n, n);
        for (int i = 0; i < dg; ++i)
            for (int j = 0; j <= df; ++j) s(i, i + df - j) = fc[static_cast<size_t>(j)].eval(x);
        for (int i = 0; i < df; ++i)
            for (int j = 0; j <= dg; ++j) s(dg + i, i + dg - j) = gc[static_cast<size_t>(j)].eval(x);
        xs.push_back(x);
        ys.push_back(det(s));
    }
    UniPoly<K> r = UniPoly<K>::interpolate(xs, ys);
    return {r, r.is_zero()};
}

/// Resultant eliminating the named variable ('x' or 'y'); result is a
/// polynomial in the other variable.
template <class K>
ResultantResult<K> resultant(const BiPoly<K>& f, const BiPoly<K>& g, char eliminate) {
    if (eliminate == 'y') return resultant_y(f, g);
    if (eliminate == 'x') return resultant_y(f.swap_vars(), g.swap_vars());
    throw std::invalid_argument("eliminate must be 'x' or 'y'");
}

} // namespace hm
