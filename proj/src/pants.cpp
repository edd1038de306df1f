#include "mcgforge/pants.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace mcgforge {

namespace {

// position of the back arc of circle j in the back hexagon [c0, s20, c2, s12, c1, s01]
constexpr int kBackPos[3] = {0, 4, 2};

struct EdgeInc {
    int vertex, slot;  // slot = position in rotation = circle index of the pants
};

std::array<EdgeInc, 2> incidences(const FatGraph& g, int edge) {
    auto es = g.edges();
    int h1 = es[edge][0], h2 = es[edge][1];
    auto slot_of = [&](int h) {
        const auto& rot = g.rotation[g.vertex_of[h]];
        for (int i = 0; i < static_cast<int>(rot.size()); ++i)
            if (rot[i] == h) return i;
        throw std::runtime_error("incidences: half-edge not in rotation");
    };
    return {EdgeInc{g.vertex_of[h1], slot_of(h1)}, EdgeInc{g.vertex_of[h2], slot_of(h2)}};
}

} // namespace

PantsComplex thicken(const FatGraph& g) {
    g.validate();
    if (!g.trivalent()) throw std::invalid_argument("thicken: graph is not trivalent");
    if (!g.connected()) throw std::invalid_argument("thicken: graph is not connected");

    PantsComplex pc;
    pc.graph = g;
    const int nv = g.num_vertices;

    SurfaceBuilder sb;
    pc.front_face.resize(nv);
    pc.back_face.resize(nv);
    for (int v = 0; v < nv; ++v) {
        pc.front_face[v] = sb.add_face(6);  // [c0, s01, c1, s12, c2, s20]
        pc.back_face[v] = sb.add_face(6);   // [c0, s20, c2, s12, c1, s01]
    }
    // seams: F(1)~B(5), F(3)~B(3), F(5)~B(1)
    for (int v = 0; v < nv; ++v) {
        sb.glue(pc.front_face[v], 1, pc.back_face[v], 5);
        sb.glue(pc.front_face[v], 3, pc.back_face[v], 3);
        sb.glue(pc.front_face[v], 5, pc.back_face[v], 1);
    }
    // circles: F_v(2i) ~ B_w(back(j)), B_v(back(i)) ~ F_w(2j)
    auto es = g.edges();
    for (int e = 0; e < static_cast<int>(es.size()); ++e) {
        auto inc = incidences(g, e);
        sb.glue(pc.front_face[inc[0].vertex], 2 * inc[0].slot,
                pc.back_face[inc[1].vertex], kBackPos[inc[1].slot]);
        sb.glue(pc.back_face[inc[0].vertex], kBackPos[inc[0].slot],
                pc.front_face[inc[1].vertex], 2 * inc[1].slot);
    }
    std::ostringstream name;
    name << "pants[v=" << nv << "]";
    pc.surface = sb.build(name.str());

    // recover edge ids
    auto surf = pc.surface;
    pc.seam.resize(nv);
    for (int v = 0; v < nv; ++v) {
        pc.seam[v][0] = surf->edge_at(pc.front_face[v], 1);
        pc.seam[v][1] = surf->edge_at(pc.front_face[v], 3);
        pc.seam[v][2] = surf->edge_at(pc.front_face[v], 5);
    }
    pc.circle_arc.resize(es.size());
    for (int e = 0; e < static_cast<int>(es.size()); ++e) {
        auto inc = incidences(g, e);
        pc.circle_arc[e][0] = surf->edge_at(pc.front_face[inc[0].vertex], 2 * inc[0].slot);
        pc.circle_arc[e][1] = surf->edge_at(pc.back_face[inc[0].vertex], kBackPos[inc[0].slot]);
    }

    int chi = surf->euler_characteristic();
    int rank = g.num_edges() - g.num_vertices + 1;
    if (chi != 2 - 2 * rank)
        throw std::runtime_error("thicken: Euler characteristic mismatch");
    if (!surf->is_connected() || !surf->closed())
        throw std::runtime_error("thicken: bad surface");
    pc.genus = rank;

    // ---- homology reference system ----
    // spanning tree by BFS over edges in id order
    const int ne = g.num_edges();
    std::vector<bool> in_tree(ne, false), seen(nv, false);
    std::vector<int> parent_half(nv, -1);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = true;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        // explore edges in id order for determinism
        for (int e = 0; e < ne; ++e) {
            auto inc = incidences(g, e);
            int w = -1, h_to_w = -1;
            if (inc[0].vertex == v && !seen[inc[1].vertex]) {
                w = inc[1].vertex;
                h_to_w = g.rotation[v][inc[0].slot];
            } else if (inc[1].vertex == v && !seen[inc[0].vertex]) {
                w = inc[0].vertex;
                h_to_w = g.rotation[v][inc[1].slot];
            }
            if (w < 0) continue;
            in_tree[e] = true;
            seen[w] = true;
            parent_half[w] = h_to_w;  // half-edge at v pointing to w
            bfs.push(w);
        }
    }
    for (int e = 0; e < ne; ++e)
        if (!in_tree[e]) pc.nontree_edges.push_back(e);
    const int gen = pc.genus;
    if (static_cast<int>(pc.nontree_edges.size()) != gen)
        throw std::runtime_error("thicken: wrong number of fundamental cycles");

    // depth/parents for tree paths
    std::vector<int> depth(nv, 0), up_half(nv, -1);  // up_half: half-edge at v towards parent
    {
        std::function<void(int)> assign = [&](int v) {
            for (int w = 0; w < nv; ++w)
                if (parent_half[w] >= 0 && g.vertex_of[parent_half[w]] == v && depth[w] == 0 && w != 0) {
                    depth[w] = depth[v] + 1;
                    up_half[w] = g.pairing[parent_half[w]];  // at w towards v
                    assign(w);
                }
        };
        assign(0);
    }

    std::vector<CombCurve> mus, ells;
    for (int k = 0; k < gen; ++k) {
        int e = pc.nontree_edges[k];
        mus.push_back(meridian_curve(pc, e));
        // fundamental cycle: v --e--> w, then tree path w -> v
        auto inc = incidences(g, e);
        int v = inc[0].vertex, w = inc[1].vertex;
        std::vector<int> halves;  // half-edge leaving each visited vertex
        halves.push_back(g.rotation[v][inc[0].slot]);  // leave v through e
        // climb from w and from v to their common ancestor
        std::vector<int> from_w, from_v;
        int a = w, b = v;
        while (depth[a] > depth[b]) {
            from_w.push_back(up_half[a]);
            a = g.vertex_of[g.pairing[up_half[a]]];
        }
        while (depth[b] > depth[a]) {
            from_v.push_back(up_half[b]);
            b = g.vertex_of[g.pairing[up_half[b]]];
        }
        while (a != b) {
            from_w.push_back(up_half[a]);
            a = g.vertex_of[g.pairing[up_half[a]]];
            from_v.push_back(up_half[b]);
            b = g.vertex_of[g.pairing[up_half[b]]];
        }
        // path w -> anc (walk order), then anc -> v (reverse of from_v)
        for (int h : from_w) halves.push_back(h);
        for (auto it = from_v.rbegin(); it != from_v.rend(); ++it)
            halves.push_back(g.pairing[*it]);
        std::ostringstream lbl;
        lbl << "ell_" << (k + 1);
        ells.push_back(longitude_curve(pc, halves, k, lbl.str()));
    }

    // Gram matrix of (mu_1..mu_g, ell_1..ell_g)
    const int n2 = 2 * gen;
    std::vector<CombCurve> tau = mus;
    tau.insert(tau.end(), ells.begin(), ells.end());
    ExactMatrix gram(n2, n2);
    for (int i = 0; i < n2; ++i)
        for (int j = i + 1; j < n2; ++j) {
            Int p = algebraic_intersection(tau[i], tau[j]);
            gram.at(i, j) = Rational(p);
            gram.at(j, i) = Rational(-p);
        }
    std::vector<int> dsign(gen);
    for (int i = 0; i < gen; ++i) {
        for (int j = 0; j < gen; ++j) {
            Rational v = gram.at(i, gen + j);
            if (i == j) {
                if (v != Rational(1) && v != Rational(-1))
                    throw std::runtime_error("thicken: meridian-longitude pairing not unimodular");
                dsign[i] = v == Rational(1) ? 1 : -1;
            } else if (!v.is_zero()) {
                throw std::runtime_error("thicken: meridian pairs with foreign longitude");
            }
            if (!gram.at(i, j).is_zero())
                throw std::runtime_error("thicken: meridians not Lagrangian");
        }
    }

    // corrected basis: a_k = mu_k, b_k = d_k (ell_k - sum_i c_{ik} mu_i),
    // c_{jk} = -d_j L_{jk} for j < k, 0 otherwise (L = longitude Gram block)
    ExactMatrix sfin(n2, n2);
    for (int k = 0; k < gen; ++k) {
        sfin.at(k, 2 * k) = Rational(1);  // a_k = mu_k
        sfin.at(gen + k, 2 * k + 1) = Rational(dsign[k]);
        for (int i = 0; i < gen; ++i) {
            Rational cik = i < k ? Rational(-dsign[i]) * gram.at(gen + i, gen + k) : Rational(0);
            if (!cik.is_zero()) sfin.at(i, 2 * k + 1) = Rational(-dsign[k]) * cik;
        }
    }
    ExactMatrix p = sfin.transpose() * gram;
    // final Gram must be the standard interleaved J
    ExactMatrix final_gram = p * sfin;
    if (final_gram != standard_j(Genus(gen)))
        throw std::runtime_error("thicken: symplectic normalization failed");

    pc.basis_curves = tau;
    pc.coord_solver = p.transpose();
    return pc;
}

CombCurve meridian_curve(const PantsComplex& pc, int edge) {
    if (edge < 0 || edge >= pc.graph.num_edges())
        throw std::invalid_argument("meridian_curve: edge out of range");
    auto inc = incidences(pc.graph, edge);
    int v = inc[0].vertex, i = inc[0].slot;
    std::vector<CurveEvent> evs(2);
    evs[0].edge = pc.seam[v][i];
    evs[0].t = Rational(1, 3);
    evs[0].from_slot = 0;  // front -> back
    evs[1].edge = pc.seam[v][(i + 2) % 3];
    evs[1].t = Rational(2, 3);
    evs[1].from_slot = 1;  // back -> front
    std::ostringstream lbl;
    lbl << "a" << (edge + 1);
    return make_curve(pc.surface, evs, lbl.str());
}

CombCurve b_curve_unchecked(const PantsComplex& pc, int edge) {
    auto inc = incidences(pc.graph, edge);
    int v = inc[0].vertex, i = inc[0].slot;
    int w = inc[1].vertex, j = inc[1].slot;
    std::vector<CurveEvent> evs(4);
    // A1 = F_v(2i) ~ B_w, slot 0 is the front side
    evs[0].edge = pc.circle_arc[edge][0];
    evs[0].t = Rational(1, 2);
    evs[0].from_slot = 1;  // B_w -> F_v
    evs[1].edge = pc.seam[v][(i + 1) % 3];
    evs[1].t = Rational(1, 2);
    evs[1].from_slot = 0;  // F_v -> B_v
    evs[2].edge = pc.circle_arc[edge][1];  // A2 = B_v ~ F_w, slot 0 back side
    evs[2].t = Rational(1, 2);
    evs[2].from_slot = 0;  // B_v -> F_w
    evs[3].edge = pc.seam[w][(j + 1) % 3];
    evs[3].t = Rational(1, 2);
    evs[3].from_slot = 0;  // F_w -> B_w
    std::ostringstream lbl;
    lbl << "b" << (edge + 1);
    return make_curve(pc.surface, evs, lbl.str());
}

CombCurve b_curve(const PantsComplex& pc, int edge) {
    if (edge < 0 || edge >= pc.graph.num_edges())
        throw std::invalid_argument("b_curve: edge out of range");
    if (!edge_removal_connected(pc.graph, edge))
        throw std::invalid_argument("b_curve: degenerate neighborhood (graph minus edge disconnects)");
    return b_curve_unchecked(pc, edge);
}

CombCurve longitude_curve(const PantsComplex& pc, const std::vector<int>& cycle_halves, int idx,
                          const std::string& label) {
    const FatGraph& g = pc.graph;
    const int L = static_cast<int>(cycle_halves.size());
    if (L == 0) throw std::invalid_argument("longitude_curve: empty cycle");

    auto slot_of = [&](int h) {
        const auto& rot = g.rotation[g.vertex_of[h]];
        for (int s = 0; s < 3; ++s)
            if (rot[s] == h) return s;
        throw std::runtime_error("longitude_curve: rogue half-edge");
    };

    // visits: at vertex v_k, exit via cycle_halves[k]; entry via pairing of
    // the previous leave. Record events with edges/slots first, pick t later.
    std::vector<CurveEvent> evs;
    bool front = true;  // hexagon type at the current visit
    for (int k = 0; k < L; ++k) {
        int h_out = cycle_halves[k];
        int v = g.vertex_of[h_out];
        bool fix_parity = (k == L - 1) && (L % 2 == 1);
        if (fix_parity) {
            // route through a seam to flip hexagons before exiting
            int entry_slot = slot_of(g.pairing[cycle_halves[(k - 1 + L) % L]]);
            CurveEvent se;
            se.edge = pc.seam[v][entry_slot];
            se.from_slot = front ? 0 : 1;
            evs.push_back(se);
            front = !front;
        }
        // cross the exit circle's arc on the current hexagon
        int e = g.edge_of_half(h_out);
        auto inc = incidences(g, e);
        bool first_inc = g.rotation[inc[0].vertex][inc[0].slot] == h_out;
        CurveEvent ce;
        if (front) {
            ce.edge = first_inc ? pc.circle_arc[e][0] : pc.circle_arc[e][1];
            ce.from_slot = first_inc ? 0 : 1;
        } else {
            ce.edge = first_inc ? pc.circle_arc[e][1] : pc.circle_arc[e][0];
            ce.from_slot = first_inc ? 0 : 1;
        }
        evs.push_back(ce);
        front = !front;  // arcs glue front to back
    }

    // Assign parameters inside a per-curve window. Edges crossed twice need a
    // nesting order for the strands; enumerate the flips and keep the first
    // embedded realization.
    Rational lo(1, 7 + idx), hi(1, 6 + idx);
    Rational span = (hi - lo) * Rational(1, 4);
    std::map<int, std::vector<int>> groups;  // edge -> event indices
    for (std::size_t i = 0; i < evs.size(); ++i) groups[evs[i].edge].push_back(static_cast<int>(i));
    std::vector<int> doubled;
    for (auto& [e, ids] : groups) {
        if (ids.size() > 2) throw std::runtime_error("longitude_curve: edge crossed more than twice");
        if (ids.size() == 2) doubled.push_back(e);
    }
    for (int mask = 0; mask < (1 << doubled.size()); ++mask) {
        std::vector<CurveEvent> trial = evs;
        for (auto& [e, ids] : groups) {
            if (ids.size() == 1) {
                trial[ids[0]].t = lo + span;
            } else {
                int pos = static_cast<int>(std::find(doubled.begin(), doubled.end(), e) - doubled.begin());
                bool flip = (mask >> pos) & 1;
                trial[ids[0]].t = flip ? lo + span * Rational(2) : lo + span;
                trial[ids[1]].t = flip ? lo + span : lo + span * Rational(2);
            }
        }
        try {
            return make_curve(pc.surface, trial, label);
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    throw std::runtime_error("longitude_curve: no embedded realization found");
}

HomologyClass homology_class(const PantsComplex& pc, const CombCurve& c) {
    if (c.surface.get() != pc.surface.get())
        throw std::invalid_argument("homology_class: curve lives on a different complex");
    const int n2 = 2 * pc.genus;
    ExactMatrix m(n2, 1);
    for (int j = 0; j < n2; ++j)
        m.at(j, 0) = Rational(algebraic_intersection(c, pc.basis_curves[j]));
    ExactMatrix w = solve(pc.coord_solver, m);
    std::vector<Int> coords(n2);
    for (int k = 0; k < n2; ++k) {
        if (!w.at(k, 0).is_integer())
            throw std::runtime_error("homology_class: non-integral coordinates");
        coords[k] = w.at(k, 0).num();
    }
    return HomologyClass(Genus(pc.genus), coords);
}

} // namespace mcgforge
