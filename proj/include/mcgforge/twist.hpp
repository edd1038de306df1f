#ifndef MCGFORGE_TWIST_HPP
#define MCGFORGE_TWIST_HPP

#include "mcgforge/arrangement.hpp"

namespace mcgforge {

// Image of c under T_about^power, computed by rerouting c through an annular
// neighborhood of `about`: each strand entering the annulus winds one full
// turn per unit power, all strands kept on disjoint interleaved lanes. The
// positive direction satisfies class(T_a(x)) = class(x) + <a, x> a.
CombCurve twist_curve(const CombCurve& c, const CombCurve& about, int power);

} // namespace mcgforge

#endif
