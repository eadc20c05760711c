#pragma once

#include "hm/exterior.hpp"

namespace hm {

/// The monad 2-forms over V: a[0][i] = e_{i+2} ^ e_{i+3}, a[1][i] = e_{i+1} ^ e_{i+4},
/// indices mod 5. The whole restriction machinery is built from these ten forms.
template <class K>
ExteriorForm<K> monad_form(int r, int i) {
    if (r < 0 || r > 1 || i < 0 || i > 4) throw std::invalid_argument("monad index out of range");
    const int p = (r == 0) ? (i + 2) % kDim : (i + 1) % kDim;
    const int q = (r == 0) ? (i + 3) % kDim : (i + 4) % kDim;
    return wedge(ExteriorForm<K>::basis_vector(Variance::Vectors, p),
                 ExteriorForm<K>::basis_vector(Variance::Vectors, q));
}

/// Row i of B = t(A Q) with Q = [[0,1],[-1,0]]: (-a[1][i], a[0][i]).
template <class K>
ExteriorForm<K> monad_b_form(int i, int r) {
    if (r == 0) return -monad_form<K>(1, i);
    return monad_form<K>(0, i);
}

} // namespace hm
