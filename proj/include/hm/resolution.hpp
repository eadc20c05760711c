#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hm {

/// Associated pair (a_1..a_k)(b_1..b_{k+2}) of a candidate minimal free
/// resolution of the restricted bundle, both lists nondecreasing.
struct ResolutionPair {
    std::vector<int> a;
    std::vector<int> b;

    int k() const { return static_cast<int>(a.size()); }

    /// The six admissibility conditions. Returns the 1-based index of the
    /// first violated condition, or 0 when all hold.
    int violated_condition() const;
    bool valid() const { return violated_condition() == 0; }

    /// h^0(E(t)) for twists t = 0..t_max. Exactness of the sections sequence
    /// needs no correction terms: line bundles on the plane have no h^1.
    std::vector<long> cohomology_table(int t_max) const;

    /// Stable iff h^0(E) = 0, i.e. b_1 >= 1.
    bool stable() const { return !b.empty() && b.front() >= 1; }

    std::string label() const; // "(3,3,3)(2,2,2,2,2)"

    friend bool operator==(const ResolutionPair& x, const ResolutionPair& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const ResolutionPair& x, const ResolutionPair& y) {
        if (x.b != y.b) return x.b < y.b;
        return x.a < y.a;
    }
};

/// Exhaustive search over the finite region cut out by the six conditions.
/// `bound_slack` widens every derived search bound; the result must not change
/// (used by the stability property test).
std::vector<ResolutionPair> enumerate_pairs(int bound_slack = 0);

/// The named pairs, for tests and classification tables.
ResolutionPair pair_generic();     // (3,3,3)(2,2,2,2,2)
ResolutionPair pair_4_122();       // (4)(1,2,2)
ResolutionPair pair_34_1223();     // (3,4)(1,2,2,3)
ResolutionPair pair_5_114();       // (5)(1,1,4)
ResolutionPair pair_5_033();       // (5)(0,3,3)
ResolutionPair pair_45_0334();     // (4,5)(0,3,3,4)

} // namespace hm
