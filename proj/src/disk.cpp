#include "mcgforge/disk.hpp"

#include <sstream>
#include <stdexcept>

namespace mcgforge {

// Faces are rectangles with sides listed counterclockwise [left, bottom,
// right, top]; gaps are 8-gons [leftTop, leftMid, leftBot, bottom, rightBot,
// rightMid, rightTop, top]. "Left/right" sides of a column face meet the
// adjacent gap's right/left stack.
MarkedDisk build_marked_disk(int n) {
    if (n < 1) throw std::invalid_argument("build_marked_disk: n must be >= 1");
    MarkedDisk d;
    d.n = n;
    SurfaceBuilder sb;
    d.top.resize(n);
    d.marked.resize(n);
    d.bottom.resize(n);
    d.gap.resize(n + 1);
    for (int i = 0; i < n; ++i) {
        d.top[i] = sb.add_face(4);
        d.marked[i] = sb.add_face(4);
        d.bottom[i] = sb.add_face(4);
        sb.mark_face(d.marked[i]);
    }
    for (int i = 0; i <= n; ++i) d.gap[i] = sb.add_face(8);

    // column internals: top.bottom ~ marked.top, marked.bottom ~ bottom.top
    // rectangle CCW [left=0, bottom=1, right=2, top=3]
    for (int i = 0; i < n; ++i) {
        sb.glue(d.top[i], 1, d.marked[i], 3);
        sb.glue(d.marked[i], 1, d.bottom[i], 3);
    }
    // gap i sits left of column i+1 and right of column i
    // 8-gon [lt=0, lm=1, lb=2, bottom=3, rb=4, rm=5, rt=6, top=7]
    for (int i = 0; i <= n; ++i) {
        if (i > 0) {  // left stack of the gap meets column i's right sides
            sb.glue(d.gap[i], 0, d.top[i - 1], 2);
            sb.glue(d.gap[i], 1, d.marked[i - 1], 2);
            sb.glue(d.gap[i], 2, d.bottom[i - 1], 2);
        }
        if (i < n) {  // right stack meets column (i+1)'s left sides
            sb.glue(d.gap[i], 6, d.top[i], 0);
            sb.glue(d.gap[i], 5, d.marked[i], 0);
            sb.glue(d.gap[i], 4, d.bottom[i], 0);
        }
    }
    std::ostringstream name;
    name << "disk[n=" << n << "]";
    d.surface = sb.build(name.str());
    if (d.surface->euler_characteristic() != 1)
        throw std::runtime_error("build_marked_disk: not a disk");
    return d;
}

CombCurve disk_loop(const MarkedDisk& d, int first, int last, int idx, const std::string& label) {
    if (first < 1 || last > d.n || first > last)
        throw std::invalid_argument("disk_loop: bad column range");
    const CellSurface& surf = *d.surface;
    Rational tv(2 * idx + 1, 2 * idx + 3);  // distinct per family index
    std::vector<CurveEvent> evs;
    // event leaving `face` through its side
    auto add = [&](int face, int side) {
        CurveEvent e;
        e.edge = surf.edge_at(face, side);
        e.t = tv;
        e.from_slot = surf.slot_at(face, side);
        evs.push_back(e);
    };
    // top run: enter top[first-1] from gap[first-1], cross columns to
    // top[last-1], descend in gap[last], bottom run back, ascend in gap[first-1]
    const int p = first - 1, q = last - 1;
    // gap[p] right-top ~ top[p] left: crossing from the gap into the column
    add(d.gap[p], 6);
    for (int i = p; i <= q; ++i) {
        add(d.top[i], 2);                   // top[i] right ~ gap[i+1] left-top
        if (i < q) add(d.gap[i + 1], 6);    // continue into next top
    }
    // descend in gap[q+1]: cross its left-bottom into bottom[q]
    add(d.gap[q + 1], 2);
    for (int i = q; i >= p; --i) {
        add(d.bottom[i], 0);                // bottom[i] left ~ gap[i] right-bottom
        if (i > p) add(d.gap[i], 2);        // into the previous bottom
    }
    // close: ascend within gap[p] back to its right-top
    return make_curve(d.surface, evs, label);
}

int enclosed_marked(const MarkedDisk& d, const CombCurve& loop) {
    RegionSummary rs = region_summary({loop});
    if (rs.num_regions != 2)
        throw std::runtime_error("enclosed_marked: loop does not split the disk in two");
    for (int r = 0; r < rs.num_regions; ++r)
        if (!rs.touches_boundary[r]) return rs.marked_in_region[r];
    throw std::runtime_error("enclosed_marked: no inner region");
}

} // namespace mcgforge
