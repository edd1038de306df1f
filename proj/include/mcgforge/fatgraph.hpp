#ifndef MCGFORGE_FATGRAPH_HPP
#define MCGFORGE_FATGRAPH_HPP

#include <array>
#include <vector>

namespace mcgforge {

// Multigraph with rotation system. Half-edges are indexed 0..2E-1; pairing is
// a fixed-point-free involution. Loops and parallel edges permitted.
struct FatGraph {
    int num_vertices = 0;
    std::vector<int> vertex_of;             // half-edge -> vertex
    std::vector<int> pairing;               // half-edge -> half-edge
    std::vector<std::vector<int>> rotation; // per vertex, cyclic order of half-edges

    int num_half_edges() const { return static_cast<int>(vertex_of.size()); }
    int num_edges() const { return num_half_edges() / 2; }

    // Edge ids: half-edge pairs (h, pairing[h]) with h < pairing[h], ordered by h.
    std::vector<std::array<int, 2>> edges() const;
    int edge_of_half(int h) const;

    bool trivalent() const;
    bool connected() const;

    void validate() const;  // throws on malformed data
};

// The circle-with-antipodes trivalent graph: 2g-2 vertices uniformly in a
// circle, each joined to its two neighbors and its antipode. Rotation at each
// vertex: (previous neighbor, antipode, next neighbor). Requires g >= 2.
FatGraph build_gamma(int g);

// Internal spine used by the delta and Johnson scenarios: g loop edges on a
// binary caterpillar tree (2g-2 vertices, 3g-3 edges, trivalent). Loop vertex
// k has its loop on rotation slots 0,1 and the tree edge on slot 2.
FatGraph build_flower(int g);

// Models Gamma \ U_e: delete e and its endpoint vertices; every other edge
// keeps its surviving endpoints (stubs); edges with no surviving endpoint
// vanish. True iff the remaining space is nonempty and connected.
bool edge_removal_connected(const FatGraph& g, int edge);

} // namespace mcgforge

#endif
