#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "hm/errors.hpp"

namespace hm {

inline constexpr int kDim = 5; // the monad lives on P^4; the dimension is fixed
inline constexpr std::array<int, 6> kBinom = {1, 5, 10, 10, 5, 1};

enum class Variance { Vectors, Covectors };

namespace ext {

/// Basis index masks of degree k, in lexicographic order of the index tuples
/// (so the degree-2 list realizes the Pluecker ordering p01, p02, ..., p34).
inline const std::vector<std::uint8_t>& masks(int k) {
    static const std::array<std::vector<std::uint8_t>, 6> tables = [] {
        std::array<std::vector<std::uint8_t>, 6> t;
        for (int deg = 0; deg <= kDim; ++deg) {
            std::vector<std::uint8_t> list;
            std::vector<int> idx;
            auto rec = [&](auto&& self, int start) -> void {
                if (static_cast<int>(idx.size()) == deg) {
                    std::uint8_t m = 0;
                    for (int i : idx) m = static_cast<std::uint8_t>(m | (1u << i));
                    list.push_back(m);
                    return;
                }
                for (int i = start; i < kDim; ++i) {
                    idx.push_back(i);
                    self(self, i + 1);
                    idx.pop_back();
                }
            };
            rec(rec, 0);
            t[static_cast<size_t>(deg)] = std::move(list);
        }
        return t;
    }();
    return tables.at(static_cast<size_t>(k));
}

inline int index_of(int k, std::uint8_t mask) {
    const auto& list = masks(k);
    for (size_t i = 0; i < list.size(); ++i)
        if (list[i] == mask) return static_cast<int>(i);
    throw InternalError("basis mask not found");
}

/// Sign of sorting the concatenation of two disjoint sorted index sets.
inline int merge_sign(std::uint8_t a, std::uint8_t b) {
    int inversions = 0;
    for (int i = 0; i < kDim; ++i) {
        if (!(b & (1u << i))) continue;
        // elements of a greater than i jump over this element of b
        inversions += std::popcount(static_cast<unsigned>(a >> (i + 1)));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

} // namespace ext

/// Alternating k-tensor over the fixed 5-dimensional space (or its dual),
/// stored as the C(5,k) coefficients on the lexicographic basis.
template <class K>
class ExteriorForm {
public:
    ExteriorForm(int degree, Variance var)
        : degree_(degree), var_(var), c_(static_cast<size_t>(kBinom.at(static_cast<size_t>(degree)))) {}

    static ExteriorForm basis(int degree, Variance var, std::uint8_t mask) {
        ExteriorForm f(degree, var);
        f.c_[static_cast<size_t>(ext::index_of(degree, mask))] = K(1);
        return f;
    }
    /// e_i or e_i* depending on variance.
    static ExteriorForm basis_vector(Variance var, int i) {
        return basis(1, var, static_cast<std::uint8_t>(1u << i));
    }
    static ExteriorForm covector(const std::array<K, kDim>& coeffs) {
        ExteriorForm f(1, Variance::Covectors);
        for (int i = 0; i < kDim; ++i) f.c_[static_cast<size_t>(i)] = coeffs[static_cast<size_t>(i)];
        return f;
    }

    int degree() const { return degree_; }
    Variance variance() const { return var_; }
    const std::vector<K>& coeffs() const { return c_; }
    K& operator[](int i) { return c_[static_cast<size_t>(i)]; }
    const K& operator[](int i) const { return c_[static_cast<size_t>(i)]; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!scalar_is_zero(v)) return false;
        return true;
    }

    ExteriorForm operator-() const {
        ExteriorForm f(degree_, var_);
        for (size_t i = 0; i < c_.size(); ++i) f.c_[i] = -c_[i];
        return f;
    }
    friend ExteriorForm operator+(const ExteriorForm& a, const ExteriorForm& b) {
        if (a.degree_ != b.degree_ || a.var_ != b.var_)
            throw std::invalid_argument("exterior form shape mismatch");
        ExteriorForm f(a.degree_, a.var_);
        for (size_t i = 0; i < f.c_.size(); ++i) f.c_[i] = a.c_[i] + b.c_[i];
        return f;
    }
    friend ExteriorForm operator-(const ExteriorForm& a, const ExteriorForm& b) { return a + (-b); }
    ExteriorForm scaled(const K& f) const {
        ExteriorForm out(degree_, var_);
        for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * f;
        return out;
    }
    friend bool operator==(const ExteriorForm& a, const ExteriorForm& b) {
        return a.degree_ == b.degree_ && a.var_ == b.var_ && a.c_ == b.c_;
    }

    template <class F>
    auto map(F f) const {
        using L = decltype(f(std::declval<const K&>()));
        ExteriorForm<L> out(degree_, var_);
        for (size_t i = 0; i < c_.size(); ++i) out[static_cast<int>(i)] = f(c_[i]);
        return out;
    }

private:
    int degree_;
    Variance var_;
    std::vector<K> c_;
};

/// Alternating product with the shuffle signs of the lexicographic basis.
template <class K>
ExteriorForm<K> wedge(const ExteriorForm<K>& a, const ExteriorForm<K>& b) {
    if (a.variance() != b.variance()) throw std::invalid_argument("wedge of mixed variance");
    const int dk = a.degree() + b.degree();
    if (dk > kDim) throw std::invalid_argument("wedge degree exceeds dimension");
    ExteriorForm<K> out(dk, a.variance());
    const auto& ma = ext::masks(a.degree());
    const auto& mb = ext::masks(b.degree());
    const auto& mo = ext::masks(dk);
    // index lookup table for the output degree
    std::array<int, 32> pos;
    pos.fill(-1);
    for (size_t i = 0; i < mo.size(); ++i) pos[mo[i]] = static_cast<int>(i);
    for (size_t i = 0; i < ma.size(); ++i) {
        if (is_zero(a[static_cast<int>(i)])) continue;
        for (size_t j = 0; j < mb.size(); ++j) {
            if (ma[i] & mb[j]) continue;
            if (is_zero(b[static_cast<int>(j)])) continue;
            const int sign = ext::merge_sign(ma[i], mb[j]);
            K term = a[static_cast<int>(i)] * b[static_cast<int>(j)];
            const int k = pos[ma[i] | mb[j]];
            out[k] += sign > 0 ? term : -term;
        }
    }
    return out;
}

/// Interior pairing of a 2-vector against a 3-covector:
/// (result)(e_j) = phi(a ^ e_j). Signs follow the merge convention with the
/// 2-vector in the leading slots.
template <class K>
ExteriorForm<K> contract(const ExteriorForm<K>& a, const ExteriorForm<K>& phi) {
    if (a.degree() != 2 || a.variance() != Variance::Vectors || phi.degree() != 3 ||
        phi.variance() != Variance::Covectors)
        throw std::invalid_argument("contract expects a 2-vector and a 3-covector");
    ExteriorForm<K> out(1, Variance::Covectors);
    const auto& m2 = ext::masks(2);
    for (int j = 0; j < kDim; ++j) {
        const std::uint8_t jm = static_cast<std::uint8_t>(1u << j);
        K val(0);
        for (size_t i = 0; i < m2.size(); ++i) {
            if (m2[i] & jm) continue;
            if (is_zero(a[static_cast<int>(i)])) continue;
            const int sign = ext::merge_sign(m2[i], jm);
            const K& p = phi[ext::index_of(3, static_cast<std::uint8_t>(m2[i] | jm))];
            K term = a[static_cast<int>(i)] * p;
            val += sign > 0 ? term : -term;
        }
        out[j] = val;
    }
    return out;
}

/// Complete contraction of a 2-vector with a 2-covector:
/// <e_i ^ e_j, e_k* ^ e_l*> = delta_ik delta_jl for i<j, k<l.
template <class K>
K full_pair(const ExteriorForm<K>& a, const ExteriorForm<K>& psi) {
    if (a.degree() != 2 || psi.degree() != 2 || a.variance() == psi.variance())
        throw std::invalid_argument("full_pair expects opposite-variance 2-forms");
    K out(0);
    for (int i = 0; i < kBinom[2]; ++i)
        if (!is_zero(a[i]) && !is_zero(psi[i])) out += a[i] * psi[i];
    return out;
}

/// The five Pluecker quadrics, as the coefficients of omega ^ omega on the
/// lexicographic 4-form basis (halved integer combination; computed directly
/// as the sum over unordered complementary index pairs).
template <class K>
std::array<K, kDim> plucker_quadrics(const ExteriorForm<K>& omega) {
    if (omega.degree() != 2) throw std::invalid_argument("quadrics of a non-2-form");
    std::array<K, kDim> out{};
    const auto& m2 = ext::masks(2);
    const auto& m4 = ext::masks(4);
    for (size_t t = 0; t < m4.size(); ++t) {
        K q(0);
        for (size_t i = 0; i < m2.size(); ++i) {
            for (size_t j = i + 1; j < m2.size(); ++j) {
                if ((m2[i] & m2[j]) != 0 || (m2[i] | m2[j]) != m4[t]) continue;
                K term = omega[static_cast<int>(i)] * omega[static_cast<int>(j)];
                q += ext::merge_sign(m2[i], m2[j]) > 0 ? term : -term;
            }
        }
        out[t] = q;
    }
    return out;
}

template <class K>
struct DecomposableCheck {
    bool decomposable = false;
    std::array<K, kDim> quadrics{};
};

/// True iff omega ^ omega = 0, i.e. the 2-form is a point of G(2,4).
template <class K>
DecomposableCheck<K> decomposable_test(const ExteriorForm<K>& omega) {
    DecomposableCheck<K> out;
    out.quadrics = plucker_quadrics(omega);
    out.decomposable = !omega.is_zero();
    for (const auto& q : out.quadrics)
        if (!is_zero(q)) out.decomposable = false;
    return out;
}

/// Pluecker point of the plane {x* = y* = 0}: coefficients of x* ^ y* in the
/// canonical lexicographic order (p01, p02, p03, p04, p12, ..., p34).
template <class K>
std::array<K, 10> plucker_from_covectors(const std::array<K, kDim>& x, const std::array<K, kDim>& y) {
    ExteriorForm<K> w = wedge(ExteriorForm<K>::covector(x), ExteriorForm<K>::covector(y));
    if (w.is_zero()) throw ValidationError("covectors are linearly dependent");
    std::array<K, 10> out;
    for (int i = 0; i < 10; ++i) out[static_cast<size_t>(i)] = w[i];
    return out;
}

} // namespace hm
