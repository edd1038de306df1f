#ifndef MCGFORGE_DISK_HPP
#define MCGFORGE_DISK_HPP

#include "mcgforge/arrangement.hpp"

namespace mcgforge {

// Disk with n marked cells in a row: per marked column a top cell, the marked
// cell and a bottom cell; full-height gap cells between columns and at both
// ends. The boundary of the big rectangle is the disk boundary.
struct MarkedDisk {
    std::shared_ptr<const CellSurface> surface;
    int n = 0;
    std::vector<int> top, marked, bottom;  // per column
    std::vector<int> gap;                  // gap[0] = left cap .. gap[n] = right cap
};

MarkedDisk build_marked_disk(int n);

// Simple closed curve around the marked cells of columns first..last
// (1-based, inclusive). idx picks disjoint default positions per family.
CombCurve disk_loop(const MarkedDisk& d, int first, int last, int idx, const std::string& label);

// Number of marked cells enclosed by the loop (the complementary region not
// touching the disk boundary).
int enclosed_marked(const MarkedDisk& d, const CombCurve& loop);

} // namespace mcgforge

#endif
