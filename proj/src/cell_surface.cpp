#include "mcgforge/cell_surface.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace mcgforge {

int CellSurface::slot_at(int f, int i) const { return face_slots_[f][i]; }

int CellSurface::num_marked() const {
    int n = 0;
    for (bool m : marked_) n += m ? 1 : 0;
    return n;
}

int CellSurface::euler_characteristic() const {
    return num_vertices_ - num_edges() + num_faces();
}

bool CellSurface::closed() const { return num_boundary_edges_ == 0; }

bool CellSurface::is_connected() const {
    if (num_faces() == 0) return false;
    std::vector<bool> seen(num_faces(), false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int i = 0; i < face_size(f); ++i) {
            const SurfEdge& e = edges_[face_sides_[f][i]];
            for (int s = 0; s < 2; ++s) {
                if (!e.side[s].valid()) continue;
                int g = e.side[s].face;
                if (!seen[g]) {
                    seen[g] = true;
                    stack.push_back(g);
                }
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Point CellSurface::boundary_point(int f, int side_index, const Rational& local_t) const {
    const int k = face_size(f);
    // boundary coordinate w in [0, k); tan-half-angle u = C(2w - k)/k with C = 7
    Rational w = Rational(side_index) + local_t;
    Rational u = Rational(7) * (w + w - Rational(k)) / Rational(k);
    return circle_point(u);
}

Point CellSurface::embed(int e, const Rational& t, int slot) const {
    const SurfEdge& ed = edges_[e];
    if (!ed.side[slot].valid()) throw std::invalid_argument("embed: invalid slot");
    return boundary_point(ed.side[slot].face, ed.side[slot].index, local_t(e, t, slot));
}

int SurfaceBuilder::add_face(int nsides) {
    if (nsides < 2) throw std::invalid_argument("add_face: need >= 2 sides");
    faces_.push_back({nsides, false});
    glued_.emplace_back(nsides, -1);
    return static_cast<int>(faces_.size()) - 1;
}

void SurfaceBuilder::mark_face(int f) { faces_[f].marked = true; }

void SurfaceBuilder::glue(int f1, int i1, int f2, int i2) {
    if (f1 == f2 && i1 == i2) throw std::invalid_argument("glue: cannot glue side to itself");
    if (glued_[f1][i1] != -1 || glued_[f2][i2] != -1)
        throw std::invalid_argument("glue: side already glued");
    glued_[f1][i1] = 1;
    glued_[f2][i2] = 1;
    glue_list_.push_back({f1, i1, f2, i2});
}

std::shared_ptr<const CellSurface> SurfaceBuilder::build(const std::string& name) {
    auto s = std::make_shared<CellSurface>();
    s->name = name;
    const int nf = static_cast<int>(faces_.size());
    s->face_sides_.resize(nf);
    s->face_slots_.resize(nf);
    s->marked_.resize(nf);
    for (int f = 0; f < nf; ++f) {
        s->face_sides_[f].assign(faces_[f].nsides, -1);
        s->face_slots_[f].assign(faces_[f].nsides, -1);
        s->marked_[f] = faces_[f].marked;
    }
    for (const auto& g : glue_list_) {
        SurfEdge e;
        e.side[0] = {g[0], g[1]};
        e.side[1] = {g[2], g[3]};
        int id = static_cast<int>(s->edges_.size());
        s->edges_.push_back(e);
        s->face_sides_[g[0]][g[1]] = id;
        s->face_slots_[g[0]][g[1]] = 0;
        s->face_sides_[g[2]][g[3]] = id;
        s->face_slots_[g[2]][g[3]] = 1;
    }
    for (int f = 0; f < nf; ++f)
        for (int i = 0; i < faces_[f].nsides; ++i)
            if (s->face_sides_[f][i] == -1) {
                SurfEdge e;
                e.side[0] = {f, i};
                int id = static_cast<int>(s->edges_.size());
                s->edges_.push_back(e);
                s->face_sides_[f][i] = id;
                s->face_slots_[f][i] = 0;
                ++s->num_boundary_edges_;
            }

    // vertex classes: corner j of face f is the starting corner of side j.
    // Gluing side (f1,i1) to (f2,i2) orientation-reversingly identifies
    // start(f1,i1) ~ end(f2,i2) and end(f1,i1) ~ start(f2,i2).
    std::vector<int> corner_offset(nf + 1, 0);
    for (int f = 0; f < nf; ++f) corner_offset[f + 1] = corner_offset[f] + faces_[f].nsides;
    std::vector<int> parent(corner_offset[nf]);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int>* pp = &parent;
    std::function<int(int)> find = [&](int x) {
        return (*pp)[x] == x ? x : (*pp)[x] = find((*pp)[x]);
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    auto corner = [&](int f, int j) { return corner_offset[f] + ((j % faces_[f].nsides + faces_[f].nsides) % faces_[f].nsides); };
    for (const auto& g : glue_list_) {
        unite(corner(g[0], g[1]), corner(g[2], g[3] + 1));
        unite(corner(g[0], g[1] + 1), corner(g[2], g[3]));
    }
    int vcount = 0;
    for (int c = 0; c < corner_offset[nf]; ++c)
        if (find(c) == c) ++vcount;
    s->num_vertices_ = vcount;
    return s;
}

} // namespace mcgforge
