#include "hm/heisenberg.hpp"

#include <deque>

namespace hm {

long trivial_summand_dim(int i) {
    if (i < 1) throw ValidationError("symmetric power index must be >= 1");
    Cyclotomic total;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c) {
                Matrix<Cyclotomic> g = group_matrix(GroupElement{a, b, c});
                // traces of powers on V, up to 2i
                std::vector<Cyclotomic> tv(static_cast<size_t>(2 * i) + 1);
                Matrix<Cyclotomic> gp = g;
                for (int j = 1; j <= 2 * i; ++j) {
                    Cyclotomic tr;
                    for (int d = 0; d < kDim; ++d) tr += gp(d, d);
                    tv[static_cast<size_t>(j)] = tr;
                    if (j < 2 * i) gp = gp * g;
                }
                // power sums on W = Lambda^2 V: p_j = (t_j^2 - t_{2j}) / 2
                std::vector<Cyclotomic> p(static_cast<size_t>(i) + 1);
                const Cyclotomic half(Rational(1, 2));
                for (int j = 1; j <= i; ++j)
                    p[static_cast<size_t>(j)] =
                        (tv[static_cast<size_t>(j)] * tv[static_cast<size_t>(j)] - tv[static_cast<size_t>(2 * j)]) * half;
                // Newton: k h_k = sum_{j=1..k} p_j h_{k-j}
                std::vector<Cyclotomic> h(static_cast<size_t>(i) + 1);
                h[0] = Cyclotomic(1);
                for (int k = 1; k <= i; ++k) {
                    Cyclotomic acc;
                    for (int j = 1; j <= k; ++j) acc += p[static_cast<size_t>(j)] * h[static_cast<size_t>(k - j)];
                    h[static_cast<size_t>(k)] = acc * Cyclotomic(Rational(1, k));
                }
                total += h[static_cast<size_t>(i)];
            }
    Cyclotomic dim = total * Cyclotomic(Rational(1, 125));
    if (!dim.is_rational() || !dim.rational_part().is_integer())
        throw InternalError("character sum is not an integer: " + dim.str());
    long out = dim.rational_part().numerator().get_si();
    if (out < 0) throw InternalError("negative invariant dimension");
    return out;
}

std::vector<LineSpec<Cyclotomic>> line_orbit(const LineSpec<Cyclotomic>& start) {
    std::vector<LineSpec<Cyclotomic>> orbit{start};
    std::deque<LineSpec<Cyclotomic>> todo{start};
    const std::array<GroupElement, 2> gens = {GroupElement::sigma(), GroupElement::tau()};
    while (!todo.empty()) {
        LineSpec<Cyclotomic> cur = todo.front();
        todo.pop_front();
        for (const auto& g : gens) {
            LineSpec<Cyclotomic> img = act_on_line(g, cur);
            bool known = false;
            for (const auto& l : orbit)
                if (l.same_line(img)) {
                    known = true;
                    break;
                }
            if (!known) {
                orbit.push_back(img);
                todo.push_back(img);
            }
        }
        if (orbit.size() > 200) throw InternalError("line orbit failed to close");
    }
    return orbit;
}

} // namespace hm
