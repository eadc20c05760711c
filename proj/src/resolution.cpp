#include "hm/resolution.hpp"

#include <algorithm>

namespace hm {

int ResolutionPair::violated_condition() const {
    const int kk = k();
    if (static_cast<int>(b.size()) != kk + 2) return 3; // shape failure reads as minimality
    long s1 = 0, s2 = 0;
    for (int v : a) {
        s1 += v;
        s2 += static_cast<long>(v) * v;
    }
    for (int v : b) {
        s1 -= v;
        s2 -= static_cast<long>(v) * v;
    }
    if (s1 != -1) return 1;
    if (s2 != 7) return 2;
    for (int i = 0; i < kk; ++i)
        if (a[static_cast<size_t>(i)] < b[static_cast<size_t>(i) + 2] + 1) return 3;
    if (b.front() < 0) return 4;
    if (2 * b.back() + kk > 11) return 5;
    if (kk > 0 && 2 * a.back() + kk > 12) return 6;
    return 0;
}

std::vector<long> ResolutionPair::cohomology_table(int t_max) const {
    auto h0_line = [](int d) -> long {
        if (d < 0) return 0;
        return static_cast<long>(d + 2) * (d + 1) / 2; // C(d+2, 2)
    };
    std::vector<long> out;
    out.reserve(static_cast<size_t>(t_max) + 1);
    for (int t = 0; t <= t_max; ++t) {
        long h = 0;
        for (int bj : b) h += h0_line(t - bj);
        for (int ai : a) h -= h0_line(t - ai);
        out.push_back(h);
    }
    return out;
}

std::string ResolutionPair::label() const {
    auto list = [](const std::vector<int>& v) {
        std::string s = "(";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + ")";
    };
    return list(a) + list(b);
}

std::vector<ResolutionPair> enumerate_pairs(int bound_slack) {
    // Bounds implied by the conditions: a_i >= b_{i+2}+1 >= 1 and
    // 2 a_k + k <= 12 give k <= 10 and a_k <= 5; 2 b_{k+2} + k <= 11 gives
    // b <= 5. The slack widens everything for the stability check.
    const int kmax = 10 + bound_slack;
    const int amax = 6 + bound_slack;
    const int bmax = 5 + bound_slack;
    const int abound = 12 + 2 * bound_slack; // 2 a_k + k <= this
    const int bbound = 11 + 2 * bound_slack; // 2 b_{k+2} + k <= this
    std::vector<ResolutionPair> out;
    std::vector<int> acur, bcur;

    auto emit = [&](const std::vector<int>& av, const std::vector<int>& bv) {
        ResolutionPair p{av, bv};
        if (p.valid()) out.push_back(std::move(p));
    };
    // nondecreasing lists by recursion; the lists only grow, so a value that
    // already violates the tail bound of condition (5)/(6) prunes the branch
    auto gen_b = [&](auto&& self, const std::vector<int>& av, int k, int len, int minv) -> void {
        if (static_cast<int>(bcur.size()) == len) {
            emit(av, bcur);
            return;
        }
        for (int v = minv; v <= bmax; ++v) {
            if (2 * v + k > bbound) break;
            bcur.push_back(v);
            self(self, av, k, len, v);
            bcur.pop_back();
        }
    };
    auto gen_a = [&](auto&& self, int k, int minv) -> void {
        if (static_cast<int>(acur.size()) == k) {
            gen_b(gen_b, acur, k, k + 2, 0);
            return;
        }
        for (int v = minv; v <= amax; ++v) {
            if (k > 0 && 2 * v + k > abound) break;
            acur.push_back(v);
            self(self, k, v);
            acur.pop_back();
        }
    };
    for (int k = 0; k <= kmax; ++k) gen_a(gen_a, k, 1);
    std::sort(out.begin(), out.end());
    return out;
}

ResolutionPair pair_generic() { return {{3, 3, 3}, {2, 2, 2, 2, 2}}; }
ResolutionPair pair_4_122() { return {{4}, {1, 2, 2}}; }
ResolutionPair pair_34_1223() { return {{3, 4}, {1, 2, 2, 3}}; }
ResolutionPair pair_5_114() { return {{5}, {1, 1, 4}}; }
ResolutionPair pair_5_033() { return {{5}, {0, 3, 3}}; }
ResolutionPair pair_45_0334() { return {{4, 5}, {0, 3, 3, 4}}; }

} // namespace hm
