#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hm/inplane.hpp"
#include "hm/plane.hpp"
#include "hm/restriction.hpp"

namespace hm {

/// Full classification output for one plane.
template <class K>
struct StratumReport {
    int rank_m = 0;
    bool jumping = false;
    int h0_twist1 = 0;
    std::vector<ResolutionPair> candidates;
    std::optional<ResolutionPair> resolved;
    bool unresolved = false;
    std::string unresolved_reason;
    std::vector<InPlaneWitness<K>> witness_lines;
    // rank-12 diagnostics: the two order-3 detection routes
    std::optional<bool> contains_hm_line;
    std::optional<LocusStatus> witness_search_status;
};

namespace detail {

inline Cyclotomic to_cyclotomic(const Rational& v) { return Cyclotomic(v); }
inline Cyclotomic to_cyclotomic(const Cyclotomic& v) { return v; }

template <class K>
bool touches_hm_line(const PlaneSpec<K>& plane) {
    PlaneSpec<Cyclotomic> pc = plane.map([](const K& v) { return to_cyclotomic(v); });
    for (const auto& line : hm_lines())
        if (plane_contains_line(pc, line)) return true;
    return false;
}

} // namespace detail

/// Rank classification plus witness-based disambiguation of the rank-14 and
/// rank-12 couples: rank 14 splits on the existence of an order-2 line, rank
/// 12 on an order-3 line. The order-3 route is double-checked against
/// containment of one of the 25 triple-jumping lines; disagreement is a bug.
/// Degenerate searches yield an explicit unresolved status, never a guess.
template <class K>
StratumReport<K> classify_resolution(const PlaneSpec<K>& plane, Rng rng) {
    StratumReport<K> out;
    out.jumping = is_jumping_plane(plane);
    out.rank_m = rank(build_M(plane));
    RankClass rc = rank_class(out.rank_m);
    out.h0_twist1 = rc.h0_twist1;
    out.candidates = rc.candidates;
    if ((out.rank_m == 12) != out.jumping)
        throw InternalError("jumping flag disagrees with rank 12");

    switch (out.rank_m) {
        case 15:
            out.resolved = pair_generic();
            break;
        case 13:
            out.resolved = pair_5_114();
            break;
        case 14: {
            InPlaneSearch<K> search = find_jumping_lines_in_plane(plane, 2, rng.fork());
            out.witness_search_status = search.status;
            out.witness_lines = search.witnesses;
            if (search.status == LocusStatus::Empty) {
                out.resolved = pair_4_122();
            } else if (search.status == LocusStatus::Finite && search.count > 0) {
                out.resolved = pair_34_1223();
            } else {
                out.unresolved = true;
                out.unresolved_reason = std::string("order-2 locus search degenerate: ") +
                                        locus_status_name(search.status);
            }
            break;
        }
        case 12: {
            const bool hm_contained = detail::touches_hm_line(plane);
            out.contains_hm_line = hm_contained;
            InPlaneSearch<K> search = find_jumping_lines_in_plane(plane, 3, rng.fork());
            out.witness_search_status = search.status;
            out.witness_lines = search.witnesses;
            if (search.status == LocusStatus::Empty || search.status == LocusStatus::Finite) {
                const bool has_order3 = search.count > 0;
                if (has_order3 != hm_contained)
                    throw InternalError("order-3 search and HM-line containment disagree");
            }
            out.resolved = hm_contained ? pair_45_0334() : pair_5_033();
            break;
        }
        default:
            break;
    }
    return out;
}

} // namespace hm
