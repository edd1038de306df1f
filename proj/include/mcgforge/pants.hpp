#ifndef MCGFORGE_PANTS_HPP
#define MCGFORGE_PANTS_HPP

#include "mcgforge/arrangement.hpp"
#include "mcgforge/fatgraph.hpp"
#include "mcgforge/homology.hpp"

#include <array>

namespace mcgforge {

// Pants decomposition of the boundary of a thickened trivalent fat graph.
// One pair of pants per vertex, split into front/back hexagons along three
// seams; one pants curve (meridian) per edge, glued front-to-back.
struct PantsComplex {
    std::shared_ptr<const CellSurface> surface;
    FatGraph graph;
    int genus = 0;

    std::vector<int> front_face, back_face;       // per vertex
    std::vector<std::array<int, 3>> seam;         // per vertex: edge ids of seams (01, 12, 20)
    std::vector<std::array<int, 2>> circle_arc;   // per graph edge: the two arc edge ids

    // homology reference system: mu_1..mu_g (meridians of the non-tree
    // edges), ell_1..ell_g (fundamental-cycle longitudes), plus the exact
    // change of basis onto a standard symplectic basis
    std::vector<CombCurve> basis_curves;
    std::vector<int> nontree_edges;
    ExactMatrix coord_solver;  // P^T with P = S_fin^T * Gram

    int pants_count() const { return graph.num_vertices; }
    int curve_count() const { return graph.num_edges(); }
};

// Thickens a trivalent connected fat graph; validates chi = 2 - 2g.
PantsComplex thicken(const FatGraph& g);

// The pants curve of edge e pushed into the pants at its first incidence.
CombCurve meridian_curve(const PantsComplex& pc, int edge);

// Curve in the 4-holed sphere S_e meeting meridian(e) twice, algebraically
// zero, disjoint from all other meridians. Requires edge_removal_connected.
CombCurve b_curve(const PantsComplex& pc, int edge);

// Same construction without the S_e-nondegeneracy precondition (used by the
// scenario families on tree edges).
CombCurve b_curve_unchecked(const PantsComplex& pc, int edge);

// Longitude along a closed cycle of half-edges (h_k = half-edge leaving the
// k-th vertex of the cycle). idx picks disjoint default positions.
CombCurve longitude_curve(const PantsComplex& pc, const std::vector<int>& cycle_halves, int idx,
                          const std::string& label);

// Class of an oriented combinatorial curve in the standard basis
// (a_1, b_1, ..., a_g, b_g); the orientation is the trace's own.
HomologyClass homology_class(const PantsComplex& pc, const CombCurve& c);

} // namespace mcgforge

#endif
