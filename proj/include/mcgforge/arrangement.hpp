#ifndef MCGFORGE_ARRANGEMENT_HPP
#define MCGFORGE_ARRANGEMENT_HPP

#include "mcgforge/curve.hpp"

#include <vector>

namespace mcgforge {

// Transverse crossing count of the two traces as realized (no reduction).
int raw_crossings(const CombCurve& a, const CombCurve& b);

// Signed crossing sum (homotopy invariant; any transverse position).
Int algebraic_intersection(const CombCurve& a, const CombCurve& b);

struct PairPosition {
    CombCurve c1, c2;   // isotoped copies, pairwise bigon-free
    int crossings;
};

// Puts the pair in combinatorially transverse position and removes innermost
// bigons (bigons enclosing marked cells or surface boundary are never
// removed); the remaining crossing count is the geometric intersection
// number by the bigon criterion.
PairPosition minimal_position(const CombCurve& c1, const CombCurve& c2);

int geometric_intersection(const CombCurve& c1, const CombCurve& c2);

// True iff the pair, as given, admits no removable bigon.
bool pair_is_minimal(const CombCurve& c1, const CombCurve& c2);

struct RegionSummary {
    int num_regions = 0;
    std::vector<int> marked_in_region;   // marked cells attributed per region
    std::vector<bool> touches_boundary;  // region meets the surface boundary
};

// Components of the complement of the system (marked cells act as
// punctures). Pre: curves pairwise transverse and bigon-free.
int complement_components(const std::vector<CombCurve>& curves);

RegionSummary region_summary(const std::vector<CombCurve>& curves);

} // namespace mcgforge

#endif
