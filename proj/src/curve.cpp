#include "mcgforge/curve.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace mcgforge {

int CombCurve::face_after(int k) const {
    const CurveEvent& e = ev(k);
    return surface->edge(e.edge).side[e.to_slot()].face;
}

Point CombCurve::chord_start(int k) const {
    const CurveEvent& e = ev(k);
    return surface->embed(e.edge, e.t, e.to_slot());
}

Point CombCurve::chord_end(int k) const {
    const CurveEvent& e = ev(k + 1);
    return surface->embed(e.edge, e.t, e.from_slot);
}

std::string trace_error(const CellSurface& surf, const std::vector<CurveEvent>& events) {
    if (events.size() < 2) return "trace must have at least two crossings";
    for (const auto& e : events) {
        if (e.edge < 0 || e.edge >= surf.num_edges()) return "event edge out of range";
        if (e.t <= Rational(0) || e.t >= Rational(1)) return "event parameter outside (0,1)";
        if (e.from_slot != 0 && e.from_slot != 1) return "bad slot";
        const SurfEdge& ed = surf.edge(e.edge);
        if (ed.boundary()) return "curve crosses a boundary edge";
        if (surf.face_marked(ed.side[0].face) || surf.face_marked(ed.side[1].face))
            return "curve enters a marked cell";
    }
    const int n = static_cast<int>(events.size());
    for (int k = 0; k < n; ++k) {
        const CurveEvent& a = events[k];
        const CurveEvent& b = events[(k + 1) % n];
        int fa = surf.edge(a.edge).side[1 - a.from_slot].face;
        int fb = surf.edge(b.edge).side[b.from_slot].face;
        if (fa != fb) return "consecutive events do not share a face";
    }
    // transversality needs distinct points per edge
    std::map<int, std::vector<Rational>> per_edge;
    for (const auto& e : events) per_edge[e.edge].push_back(e.t);
    for (auto& [edge, ts] : per_edge) {
        for (std::size_t i = 0; i < ts.size(); ++i)
            for (std::size_t j = i + 1; j < ts.size(); ++j)
                if (ts[i] == ts[j]) return "repeated crossing point on an edge";
    }
    return "";
}

int self_crossings(const CombCurve& c) {
    const int n = c.size();
    // group chords by face
    std::map<int, std::vector<int>> by_face;
    for (int k = 0; k < n; ++k) by_face[c.face_after(k)].push_back(k);
    int count = 0;
    for (const auto& [face, segs] : by_face) {
        for (std::size_t i = 0; i < segs.size(); ++i)
            for (std::size_t j = i + 1; j < segs.size(); ++j) {
                SegCross sc = segment_cross(c.chord_start(segs[i]), c.chord_end(segs[i]),
                                            c.chord_start(segs[j]), c.chord_end(segs[j]));
                if (sc.crosses) ++count;
            }
    }
    return count;
}

CombCurve make_curve(std::shared_ptr<const CellSurface> surface,
                     std::vector<CurveEvent> events, std::string label) {
    std::string err = trace_error(*surface, events);
    if (!err.empty()) throw std::invalid_argument("make_curve(" + label + "): " + err);
    CombCurve c;
    c.surface = std::move(surface);
    c.events = std::move(events);
    c.label = std::move(label);
    int sc = self_crossings(c);
    if (sc != 0) {
        std::ostringstream os;
        os << "make_curve(" << c.label << "): trace is not embedded (" << sc << " self-crossings)";
        throw std::invalid_argument(os.str());
    }
    return c;
}

namespace {

// gap from t to the nearest of the other values (or 0/1) in the +-dir direction
Rational gap_towards(const Rational& t, const std::vector<Rational>& others, int dir) {
    Rational best = dir > 0 ? Rational(1) - t : t;
    for (const auto& o : others) {
        if (o == t) continue;
        if (dir > 0 && o > t) {
            Rational d = o - t;
            if (d < best) best = d;
        }
        if (dir < 0 && o < t) {
            Rational d = t - o;
            if (d < best) best = d;
        }
    }
    return best;
}

} // namespace

CombCurve push_off(const CombCurve& c) {
    const CellSurface& surf = *c.surface;
    const int n = c.size();
    std::map<int, std::vector<Rational>> per_edge;
    for (const auto& e : c.events) per_edge[e.edge].push_back(e.t);

    // offset direction per event: left of travel, decided in the face entered
    std::vector<int> dir(n);
    for (int k = 0; k < n; ++k) {
        const CurveEvent& e = c.ev(k);
        Point p = c.chord_start(k), q = c.chord_end(k);
        // candidate +: larger local parameter on the canonical slot
        Point plus = surf.embed(e.edge, e.t + gap_towards(e.t, per_edge[e.edge], +1) * Rational(1, 2),
                                e.to_slot());
        dir[k] = cross(q - p, plus - p) > Rational(0) ? +1 : -1;
    }

    Rational shrink(1);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<CurveEvent> evs = c.events;
        for (int k = 0; k < n; ++k) {
            Rational g = gap_towards(c.events[k].t, per_edge[c.events[k].edge], dir[k]);
            evs[k].t = c.events[k].t + Rational(dir[k]) * g * shrink * Rational(1, 2);
        }
        try {
            CombCurve copy = make_curve(c.surface, evs, c.label + "+");
            return copy;
        } catch (const std::invalid_argument&) {
            shrink = shrink * Rational(1, 2);
        }
    }
    throw std::runtime_error("push_off: failed to find an embedded parallel copy");
}

} // namespace mcgforge
