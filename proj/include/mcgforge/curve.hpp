#ifndef MCGFORGE_CURVE_HPP
#define MCGFORGE_CURVE_HPP

#include "mcgforge/cell_surface.hpp"

#include <memory>
#include <string>
#include <vector>

namespace mcgforge {

// One transverse crossing of the 1-skeleton: the curve passes from
// side[from_slot] to side[1-from_slot] of the edge at canonical parameter t.
struct CurveEvent {
    int edge = -1;
    Rational t;
    int from_slot = 0;

    int to_slot() const { return 1 - from_slot; }
};

// Combinatorial simple closed curve: a cyclic sequence of crossings, with a
// straight chord inside each visited face. Constructed via make_curve, which
// certifies the trace is closed, transverse and embedded.
class CombCurve {
public:
    std::shared_ptr<const CellSurface> surface;
    std::vector<CurveEvent> events;
    std::string label;

    int size() const { return static_cast<int>(events.size()); }
    const CurveEvent& ev(int k) const { return events[(k % size() + size()) % size()]; }

    // face the curve sits in after event k (and before event k+1)
    int face_after(int k) const;
    // chord endpoints of the visit between events k and k+1
    Point chord_start(int k) const;
    Point chord_end(int k) const;
};

// Validates and certifies; throws std::invalid_argument on a malformed or
// non-simple trace.
CombCurve make_curve(std::shared_ptr<const CellSurface> surface,
                     std::vector<CurveEvent> events, std::string label);

// Structure-only checks (closedness, transversality, no marked/boundary
// crossings); returns a reason or empty string.
std::string trace_error(const CellSurface& surf, const std::vector<CurveEvent>& events);

// Number of transverse self-crossings of the trace realized with straight
// chords (0 certifies embeddedness).
int self_crossings(const CombCurve& c);

// Parallel copy offset to the left of the travel direction; disjoint from the
// original.
CombCurve push_off(const CombCurve& c);

} // namespace mcgforge

#endif
