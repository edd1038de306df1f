#include "mcgforge/twist.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mcgforge {

namespace {

struct TwistCrossing {
    int about_seg;
    Rational s_about;
    int c_seg;
    Rational s_c;
    Point at;
    int side;  // +1: c approaches from the left of `about`, -1: from the right
};

// one right (or left) twist
CombCurve single_twist(const CombCurve& c_in, const CombCurve& about_in, int d) {
    PairPosition pos = minimal_position(c_in, about_in);
    const CombCurve& c = pos.c1;
    const CombCurve& about = pos.c2;
    if (pos.crossings == 0) return c;

    const CellSurface& surf = *c.surface;
    const int r = about.size();

    // crossings of c with about
    std::vector<TwistCrossing> xs;
    for (int ak = 0; ak < r; ++ak) {
        Point a0 = about.chord_start(ak), a1 = about.chord_end(ak);
        for (int ck = 0; ck < c.size(); ++ck) {
            if (c.face_after(ck) != about.face_after(ak)) continue;
            Point c0 = c.chord_start(ck), c1 = c.chord_end(ck);
            SegCross sc = segment_cross(a0, a1, c0, c1);
            if (!sc.crosses) continue;
            TwistCrossing t;
            t.about_seg = ak;
            t.s_about = sc.s1;
            t.c_seg = ck;
            t.s_c = sc.s2;
            t.at = sc.at;
            t.side = cross(a1 - a0, c0 - a0) > Rational(0) ? +1 : -1;
            xs.push_back(t);
        }
    }
    if (static_cast<int>(xs.size()) != pos.crossings)
        throw std::runtime_error("twist_curve: crossing recount mismatch");
    const int m = static_cast<int>(xs.size());

    // all scene points per edge, for band widths and offset room
    std::map<int, std::vector<Rational>> pts;
    for (const auto& e : c.events) pts[e.edge].push_back(e.t);
    for (const auto& e : about.events) pts[e.edge].push_back(e.t);

    // band half-width per about event
    std::vector<Rational> eps(r);
    for (int k = 0; k < r; ++k) {
        const CurveEvent& e = about.events[k];
        Rational up = Rational(1) - e.t, down = e.t;
        for (const auto& p : pts[e.edge]) {
            if (p > e.t && p - e.t < up) up = p - e.t;
            if (p < e.t && e.t - p < down) down = e.t - p;
        }
        eps[k] = (up < down ? up : down) * Rational(1, 2);
        if (eps[k].is_zero()) throw std::runtime_error("twist_curve: no band room");
    }

    // canonical-t direction of "left of about" at each about event, checked in
    // both adjacent faces (orientation coherence)
    std::vector<int> left_dir(r);
    for (int k = 0; k < r; ++k) {
        const CurveEvent& e = about.events[k];
        Point p0 = about.chord_start(k), p1 = about.chord_end(k);
        Point up_next = surf.embed(e.edge, e.t + eps[k], e.to_slot());
        int dir_next = cross(p1 - p0, up_next - p0) > Rational(0) ? +1 : -1;
        Point q0 = about.chord_start(k - 1), q1 = about.chord_end(k - 1);
        Point up_prev = surf.embed(e.edge, e.t + eps[k], about.events[k].from_slot);
        int dir_prev = cross(q1 - q0, up_prev - q1) > Rational(0) ? +1 : -1;
        if (dir_next != dir_prev) throw std::runtime_error("twist_curve: incoherent orientation");
        left_dir[k] = dir_next;
    }

    // rank within the gap (same about_seg): strands starting earlier in the
    // d-direction sit higher at every shared event
    auto rank_of = [&](int i) {
        int rank = 0;
        for (int j = 0; j < m; ++j) {
            if (j == i || xs[j].about_seg != xs[i].about_seg) continue;
            bool j_after = d > 0 ? xs[j].s_about > xs[i].s_about : xs[j].s_about < xs[i].s_about;
            if (j_after) ++rank;
        }
        return rank;
    };
    Rational eta = Rational(1, r) * Rational(1, m + 1);

    // lane events for strand i, ascending (u from -1 side to +1 side)
    auto lanes_ascending = [&](int i) {
        std::vector<CurveEvent> lane;
        int start = d > 0 ? (xs[i].about_seg + 1) % r : xs[i].about_seg;
        Rational off = eta * (Rational(rank_of(i)) + Rational(1, 2));
        for (int j = 1; j <= r; ++j) {
            int ev = ((start + d * (j - 1)) % r + r) % r;
            Rational u = Rational(-1) + Rational(2 * j - 1, r) + off;
            const CurveEvent& ae = about.events[ev];
            CurveEvent ne;
            ne.edge = ae.edge;
            ne.t = ae.t + u * eps[ev] * Rational(left_dir[ev]);
            // moving in direction d along `about`: same crossing sense iff d > 0
            ne.from_slot = d > 0 ? ae.from_slot : 1 - ae.from_slot;
            lane.push_back(ne);
        }
        return lane;
    };

    // order crossings along c and splice
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (xs[a].c_seg != xs[b].c_seg) return xs[a].c_seg < xs[b].c_seg;
        return xs[a].s_c < xs[b].s_c;
    });

    std::vector<CurveEvent> out;
    std::size_t oi = 0;
    for (int k = 0; k < c.size(); ++k) {
        out.push_back(c.events[k]);
        while (oi < order.size() && xs[order[oi]].c_seg == k) {
            int i = order[oi++];
            std::vector<CurveEvent> lane = lanes_ascending(i);
            // entering from the left (+1) means entering at the u = +1 end
            if (xs[i].side > 0) {
                std::reverse(lane.begin(), lane.end());
                for (auto& e : lane) e.from_slot = 1 - e.from_slot;
            }
            for (const auto& e : lane) out.push_back(e);
        }
    }
    return make_curve(c.surface, out, c.label);
}

} // namespace

CombCurve twist_curve(const CombCurve& c, const CombCurve& about, int power) {
    if (c.surface.get() != about.surface.get())
        throw std::invalid_argument("twist_curve: curves live on different complexes");
    if (power == 0) return c;
    int d = power > 0 ? +1 : -1;
    int n = power > 0 ? power : -power;
    CombCurve cur = c;
    for (int i = 0; i < n; ++i) cur = single_twist(cur, about, d);
    return cur;
}

} // namespace mcgforge
