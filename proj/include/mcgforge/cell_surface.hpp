#ifndef MCGFORGE_CELL_SURFACE_HPP
#define MCGFORGE_CELL_SURFACE_HPP

#include "mcgforge/geom2d.hpp"

#include <memory>
#include <string>
#include <vector>

namespace mcgforge {

// Oriented polygonal surface. Each face is modeled on the unit disk: its
// boundary points live on a rational arc of the circle, one unit of boundary
// coordinate per side, so every within-face curve arc is a straight chord
// between strictly convex boundary points. All identifications are
// orientation-reversing on sides (faces coherently counterclockwise).
struct SideRef {
    int face = -1;
    int index = -1;
    bool valid() const { return face >= 0; }
};

struct SurfEdge {
    SideRef side[2];  // side[1] invalid for boundary edges
    bool boundary() const { return !side[1].valid(); }
};

class CellSurface {
public:
    int num_faces() const { return static_cast<int>(face_sides_.size()); }
    int face_size(int f) const { return static_cast<int>(face_sides_[f].size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const SurfEdge& edge(int e) const { return edges_[e]; }
    int edge_at(int f, int i) const { return face_sides_[f][i]; }
    // which slot of that edge the side (f, i) is
    int slot_at(int f, int i) const;
    bool face_marked(int f) const { return marked_[f]; }
    int num_marked() const;
    int num_vertices() const { return num_vertices_; }
    int euler_characteristic() const;
    bool closed() const;  // no boundary edges
    bool is_connected() const;

    // Geometry: boundary coordinate w in (i, i+1) for local param t on side i.
    // Boundary points are on the unit circle via a rational tan-half-angle.
    Point boundary_point(int f, int side_index, const Rational& local_t) const;
    // Point of (edge, canonical t) as seen in the face of the given slot.
    Point embed(int e, const Rational& t, int slot) const;
    Rational local_t(int e, const Rational& t, int slot) const {
        return slot == 0 ? t : Rational(1) - t;
    }

    std::string name;  // for diagnostics / complex identity in errors

private:
    friend class SurfaceBuilder;
    std::vector<std::vector<int>> face_sides_;  // face -> side index -> edge id
    std::vector<std::vector<int>> face_slots_;  // face -> side index -> slot (0/1)
    std::vector<SurfEdge> edges_;
    std::vector<bool> marked_;
    int num_vertices_ = 0;
    int num_boundary_edges_ = 0;
};

class SurfaceBuilder {
public:
    int add_face(int nsides);
    void mark_face(int f);
    // Identify side i1 of f1 with side i2 of f2 (each side glued at most once).
    void glue(int f1, int i1, int f2, int i2);
    // Finalize; unglued sides become boundary edges.
    std::shared_ptr<const CellSurface> build(const std::string& name);

private:
    struct Pending {
        int nsides;
        bool marked = false;
    };
    std::vector<Pending> faces_;
    std::vector<std::vector<int>> glued_;  // face -> side -> partner encoded, -1 if free
    std::vector<std::array<int, 4>> glue_list_;
};

} // namespace mcgforge

#endif
