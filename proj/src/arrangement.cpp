#include "mcgforge/arrangement.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mcgforge {

namespace {

struct Scene {
    std::shared_ptr<const CellSurface> surf;
    std::vector<CombCurve> curves;
};

// ---------------------------------------------------------------- genericity

// all (edge -> sorted t values) across the scene
std::map<int, std::vector<Rational>> edge_points(const Scene& s) {
    std::map<int, std::vector<Rational>> m;
    for (const auto& c : s.curves)
        for (const auto& e : c.events) m[e.edge].push_back(e.t);
    for (auto& [e, v] : m) std::sort(v.begin(), v.end());
    return m;
}

bool try_set_event(Scene& s, int curve, int ev, const Rational& t) {
    std::vector<CurveEvent> evs = s.curves[curve].events;
    evs[ev].t = t;
    try {
        CombCurve nc = make_curve(s.curves[curve].surface, evs, s.curves[curve].label);
        s.curves[curve] = nc;
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

// nudge event (curve, ev) away from its current t; keeps the curve embedded
void perturb_event(Scene& s, int curve, int ev) {
    const CurveEvent& e = s.curves[curve].events[ev];
    auto pts = edge_points(s)[e.edge];
    // gaps to nearest strictly larger / smaller scene point (or 0/1)
    Rational up = Rational(1) - e.t, down = e.t;
    for (const auto& p : pts) {
        if (p > e.t && p - e.t < up) up = p - e.t;
        if (p < e.t && e.t - p < down) down = e.t - p;
    }
    Rational frac(1, 3);
    for (int attempt = 0; attempt < 48; ++attempt) {
        for (int dir = 0; dir < 2; ++dir) {
            Rational step = (dir == 0 ? up : down) * frac;
            if (step.is_zero()) continue;
            Rational cand = dir == 0 ? e.t + step : e.t - step;
            if (cand <= Rational(0) || cand >= Rational(1)) continue;
            bool clash = false;
            for (const auto& p : pts)
                if (p == cand) { clash = true; break; }
            if (clash) continue;
            if (try_set_event(s, curve, ev, cand)) return;
        }
        frac = frac * Rational(1, 2);
    }
    throw std::runtime_error("genericize: could not perturb event");
}

struct Chord {
    int curve, seg, face;
    Point a, b;
};

std::vector<Chord> scene_chords(const Scene& s) {
    std::vector<Chord> out;
    for (std::size_t c = 0; c < s.curves.size(); ++c) {
        const CombCurve& cur = s.curves[c];
        for (int k = 0; k < cur.size(); ++k)
            out.push_back({static_cast<int>(c), k, cur.face_after(k), cur.chord_start(k), cur.chord_end(k)});
    }
    return out;
}

// returns true if anything was perturbed
bool genericize_pass(Scene& s) {
    // (a) coincident points on an edge
    std::map<int, std::vector<std::array<int, 2>>> on_edge;  // edge -> (curve, ev)
    for (std::size_t c = 0; c < s.curves.size(); ++c)
        for (int k = 0; k < s.curves[c].size(); ++k)
            on_edge[s.curves[c].events[k].edge].push_back({static_cast<int>(c), k});
    for (auto& [edge, evs] : on_edge) {
        for (std::size_t i = 0; i < evs.size(); ++i)
            for (std::size_t j = i + 1; j < evs.size(); ++j) {
                const auto &a = evs[i], &b = evs[j];
                if (s.curves[a[0]].events[a[1]].t == s.curves[b[0]].events[b[1]].t) {
                    auto later = std::max(a, b);
                    perturb_event(s, later[0], later[1]);
                    return true;
                }
            }
    }
    // (b) coincident crossing points inside a face
    auto chords = scene_chords(s);
    std::map<int, std::vector<int>> by_face;
    for (std::size_t i = 0; i < chords.size(); ++i) by_face[chords[i].face].push_back(static_cast<int>(i));
    for (const auto& [face, ids] : by_face) {
        std::vector<std::pair<Point, std::array<int, 2>>> pts;
        for (std::size_t x = 0; x < ids.size(); ++x)
            for (std::size_t y = x + 1; y < ids.size(); ++y) {
                const Chord &p = chords[ids[x]], &q = chords[ids[y]];
                if (p.curve == q.curve) continue;  // curves embedded; same-curve chords disjoint
                SegCross sc = segment_cross(p.a, p.b, q.a, q.b);
                if (!sc.crosses) continue;
                for (const auto& prev : pts)
                    if (prev.first == sc.at) {
                        // nudge one endpoint event of the later chord
                        const Chord& later = chords[std::max(ids[x], ids[y])];
                        perturb_event(s, later.curve, later.seg);
                        return true;
                    }
                pts.push_back({sc.at, {ids[x], ids[y]}});
            }
    }
    return false;
}

void genericize(Scene& s) {
    for (int i = 0; i < 1000; ++i)
        if (!genericize_pass(s)) return;
    throw std::runtime_error("genericize: did not stabilize");
}

bool scene_is_generic(Scene& s) {
    // nondestructive check: run detection only
    Scene copy = s;
    return !genericize_pass(copy);
}

// ---------------------------------------------------------------- analysis

struct Crossing {
    int face;
    int chord1, chord2;  // indices into chords; chord1 from the lower curve
    Rational s1, s2;
    Point at;
};

struct Node {
    Point p;
    int kind;  // 0 corner, 1 event, 2 crossing
    long aux;  // corner: side; event: encoded (curve, ev, slot); crossing: id
};

struct Piece {
    int u = -1, v = -1;
    bool is_chord = false;
    int chord = -1;
    Rational su, sv;     // chord params at u, v
    int edge = -1, slot = -1;
    Rational cu, cv;     // canonical t at u, v (arcs)
};

struct DirPiece {
    int piece;
    bool fwd;
};

struct Cycle {
    int face;
    std::vector<DirPiece> dp;
};

struct Analysis {
    const Scene* scene;
    std::vector<Chord> chords;
    std::vector<Crossing> crossings;
    std::vector<Node> nodes;
    std::vector<Piece> pieces;
    std::vector<Cycle> cycles;               // subfaces only
    std::vector<int> arc_partner;            // piece -> partner piece or -1
    std::vector<std::array<std::array<int, 2>, 2>> occ;  // piece -> [dir] -> (cycle, pos) or (-1,-1)
    std::vector<int> cycle_region;           // -1 for marked faces
    int num_regions = 0;

    int head_node(const DirPiece& d) const { return d.fwd ? pieces[d.piece].v : pieces[d.piece].u; }
    int tail_node(const DirPiece& d) const { return d.fwd ? pieces[d.piece].u : pieces[d.piece].v; }
};

long encode_event(int curve, int ev, int slot) { return (static_cast<long>(curve) << 24) | (ev << 2) | slot; }

Analysis analyze(const Scene& s) {
    Analysis an;
    an.scene = &s;
    an.chords = scene_chords(s);
    const CellSurface& surf = *s.surf;

    std::vector<std::vector<int>> chords_by_face(surf.num_faces());
    for (std::size_t i = 0; i < an.chords.size(); ++i)
        chords_by_face[an.chords[i].face].push_back(static_cast<int>(i));

    // crossings
    std::vector<std::vector<std::pair<Rational, int>>> cross_on_chord(an.chords.size());
    for (int f = 0; f < surf.num_faces(); ++f) {
        const auto& ids = chords_by_face[f];
        for (std::size_t x = 0; x < ids.size(); ++x)
            for (std::size_t y = x + 1; y < ids.size(); ++y) {
                int i = ids[x], j = ids[y];
                const Chord &p = an.chords[i], &q = an.chords[j];
                SegCross sc = segment_cross(p.a, p.b, q.a, q.b);
                if (!sc.crosses) continue;
                if (p.curve == q.curve)
                    throw std::runtime_error("analyze: curve is not embedded");
                int id = static_cast<int>(an.crossings.size());
                an.crossings.push_back({f, i, j, sc.s1, sc.s2, sc.at});
                cross_on_chord[i].push_back({sc.s1, id});
                cross_on_chord[j].push_back({sc.s2, id});
            }
    }
    for (auto& v : cross_on_chord) std::sort(v.begin(), v.end(),
        [](const auto& a, const auto& b) { return a.first < b.first; });

    // per-face DCEL
    std::map<std::array<long, 2>, int> node_of;  // (face, key) -> node; key: corner -> -(side+1), event -> encode, crossing -> big
    auto get_node = [&](int face, long key, const Point& p, int kind, long aux) {
        auto it = node_of.find({face, key});
        if (it != node_of.end()) return it->second;
        int id = static_cast<int>(an.nodes.size());
        an.nodes.push_back({p, kind, aux});
        node_of[{face, key}] = id;
        return id;
    };

    std::vector<std::vector<std::pair<Rational, int>>> arcs_of_edge_slot0, arcs_of_edge_slot1;
    arcs_of_edge_slot0.resize(surf.num_edges());
    arcs_of_edge_slot1.resize(surf.num_edges());

    // events per (face, side): (w, node id)
    for (int f = 0; f < surf.num_faces(); ++f) {
        const int k = surf.face_size(f);
        // boundary nodes in w order
        std::vector<std::pair<Rational, int>> bnodes;
        for (int i = 0; i < k; ++i) {
            Point cp = surf.boundary_point(f, i, Rational(0));
            int nid = get_node(f, -(i + 1), cp, 0, i);
            bnodes.push_back({Rational(i), nid});
        }
        for (std::size_t c = 0; c < s.curves.size(); ++c) {
            const CombCurve& cur = s.curves[c];
            for (int ev = 0; ev < cur.size(); ++ev) {
                const CurveEvent& e = cur.events[ev];
                const SurfEdge& ed = surf.edge(e.edge);
                for (int slot = 0; slot < 2; ++slot) {
                    if (!ed.side[slot].valid() || ed.side[slot].face != f) continue;
                    Rational lt = surf.local_t(e.edge, e.t, slot);
                    Point p = surf.boundary_point(f, ed.side[slot].index, lt);
                    long key = encode_event(static_cast<int>(c), ev, slot);
                    int nid = get_node(f, key, p, 1, key);
                    bnodes.push_back({Rational(ed.side[slot].index) + lt, nid});
                }
            }
        }
        std::sort(bnodes.begin(), bnodes.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        // arcs between consecutive boundary nodes
        for (std::size_t i = 0; i < bnodes.size(); ++i) {
            std::size_t j = (i + 1) % bnodes.size();
            Piece pc;
            pc.u = bnodes[i].second;
            pc.v = bnodes[j].second;
            pc.is_chord = false;
            // side of this arc: floor of the left w (corner at integer w starts side w)
            Rational wlo = bnodes[i].first;
            int side;
            if (j == 0) side = k - 1;  // wrap arc: from last node to corner 0, lies on side k-1
            else {
                // integer floor of wlo
                Int num = wlo.num(), den = wlo.den();
                Int q = num / den;  // wlo >= 0 here
                side = static_cast<int>(q.get_si());
                if (side >= k) side = k - 1;
            }
            pc.edge = surf.edge_at(f, side);
            pc.slot = surf.slot_at(f, side);
            auto canon = [&](const Rational& w) {
                Rational lt = w - Rational(side);
                return pc.slot == 0 ? lt : Rational(1) - lt;
            };
            pc.cu = canon(bnodes[i].first);
            pc.cv = canon(j == 0 ? Rational(k) : bnodes[j].first);
            int pid = static_cast<int>(an.pieces.size());
            an.pieces.push_back(pc);
            Rational lo = pc.slot == 0 ? pc.cu : pc.cv;  // canonical low end
            if (pc.slot == 0)
                arcs_of_edge_slot0[pc.edge].push_back({lo, pid});
            else
                arcs_of_edge_slot1[pc.edge].push_back({lo, pid});
        }
        // chord segments
        for (int ci : chords_by_face[f]) {
            const Chord& ch = an.chords[ci];
            const CombCurve& cur = s.curves[ch.curve];
            const CurveEvent& e0 = cur.ev(ch.seg);
            const CurveEvent& e1 = cur.ev(ch.seg + 1);
            long k0 = encode_event(ch.curve, ch.seg, e0.to_slot());
            long k1 = encode_event(ch.curve, (ch.seg + 1) % cur.size(), e1.from_slot);
            int n0 = node_of.at({f, k0});
            int n1 = node_of.at({f, k1});
            std::vector<std::pair<Rational, int>> stops;  // (param, node)
            stops.push_back({Rational(0), n0});
            for (const auto& [param, cid] : cross_on_chord[ci]) {
                int nid = get_node(f, 1000000000L + cid, an.crossings[cid].at, 2, cid);
                stops.push_back({param, nid});
            }
            stops.push_back({Rational(1), n1});
            for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
                Piece pc;
                pc.is_chord = true;
                pc.chord = ci;
                pc.u = stops[i].second;
                pc.v = stops[i + 1].second;
                pc.su = stops[i].first;
                pc.sv = stops[i + 1].first;
                an.pieces.push_back(pc);
            }
        }
    }

    // partners for arcs
    an.arc_partner.assign(an.pieces.size(), -1);
    for (int e = 0; e < surf.num_edges(); ++e) {
        auto& a0 = arcs_of_edge_slot0[e];
        auto& a1 = arcs_of_edge_slot1[e];
        if (surf.edge(e).boundary()) continue;
        int f0 = surf.edge(e).side[0].face, f1 = surf.edge(e).side[1].face;
        if (surf.face_marked(f0) || surf.face_marked(f1)) continue;
        if (a0.size() != a1.size()) throw std::runtime_error("analyze: mismatched edge pieces");
        auto cmp = [](const auto& x, const auto& y) { return x.first < y.first; };
        std::sort(a0.begin(), a0.end(), cmp);
        std::sort(a1.begin(), a1.end(), cmp);
        for (std::size_t i = 0; i < a0.size(); ++i) {
            an.arc_partner[a0[i].second] = a1[i].second;
            an.arc_partner[a1[i].second] = a0[i].second;
        }
    }

    // directed adjacency per node, sorted ccw
    struct Out {
        Point dir;
        int piece;
        bool fwd;
    };
    std::vector<std::vector<Out>> outs(an.nodes.size());
    for (std::size_t pid = 0; pid < an.pieces.size(); ++pid) {
        const Piece& pc = an.pieces[pid];
        const Point pu = an.nodes[pc.u].p, pv = an.nodes[pc.v].p;
        outs[pc.u].push_back({pv - pu, static_cast<int>(pid), true});
        outs[pc.v].push_back({pu - pv, static_cast<int>(pid), false});
    }
    for (auto& v : outs)
        std::sort(v.begin(), v.end(), [](const Out& a, const Out& b) { return dir_less(a.dir, b.dir); });

    // face walks
    std::map<std::array<int, 2>, int> visited;  // (piece, fwd) -> cycle or -2 outer
    auto dir_key = [](int piece, bool fwd) { return std::array<int, 2>{piece, fwd ? 1 : 0}; };
    for (std::size_t pid0 = 0; pid0 < an.pieces.size(); ++pid0)
        for (int d0 = 0; d0 < 2; ++d0) {
            if (visited.count(dir_key(static_cast<int>(pid0), d0))) continue;
            // walk
            std::vector<DirPiece> walk;
            int pid = static_cast<int>(pid0);
            bool fwd = d0;
            while (true) {
                walk.push_back({pid, fwd});
                visited[dir_key(pid, fwd)] = -3;  // provisional
                const Piece& pc = an.pieces[pid];
                int head = fwd ? pc.v : pc.u;
                // find reversed among outs[head]
                const auto& lst = outs[head];
                int idx = -1;
                for (std::size_t i = 0; i < lst.size(); ++i)
                    if (lst[i].piece == pid && lst[i].fwd == !fwd) {
                        idx = static_cast<int>(i);
                        break;
                    }
                if (idx < 0) throw std::runtime_error("analyze: dcel inconsistency");
                const Out& nxt = lst[(idx - 1 + lst.size()) % lst.size()];
                pid = nxt.piece;
                fwd = nxt.fwd;
                if (pid == static_cast<int>(pid0) && fwd == static_cast<bool>(d0)) break;
            }
            // signed area
            Rational area(0);
            for (const auto& dp : walk) {
                const Piece& pc = an.pieces[dp.piece];
                const Point &a = an.nodes[dp.fwd ? pc.u : pc.v].p, &b = an.nodes[dp.fwd ? pc.v : pc.u].p;
                area += cross(a, b);
            }
            if (area.is_zero()) throw std::runtime_error("analyze: degenerate zero-area cycle");
            int cyc_id = -2;
            if (area > Rational(0)) {
                cyc_id = static_cast<int>(an.cycles.size());
                int face = -1;
                // face of any chord or arc piece
                const Piece& pc0 = an.pieces[walk[0].piece];
                if (pc0.is_chord) face = an.chords[pc0.chord].face;
                else {
                    const SurfEdge& ed = surf.edge(pc0.edge);
                    face = ed.side[pc0.slot].face;
                }
                an.cycles.push_back({face, walk});
            }
            for (const auto& dp : walk) visited[dir_key(dp.piece, dp.fwd)] = cyc_id;
        }

    // occurrence table
    an.occ.assign(an.pieces.size(), {std::array<int, 2>{-1, -1}, std::array<int, 2>{-1, -1}});
    for (std::size_t cy = 0; cy < an.cycles.size(); ++cy)
        for (std::size_t pos = 0; pos < an.cycles[cy].dp.size(); ++pos) {
            const DirPiece& dp = an.cycles[cy].dp[pos];
            an.occ[dp.piece][dp.fwd ? 1 : 0] = {static_cast<int>(cy), static_cast<int>(pos)};
        }

    // regions: union-find on cycles through glued arcs; marked faces excluded
    std::vector<int> parent(an.cycles.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t pid = 0; pid < an.pieces.size(); ++pid) {
        int q = an.arc_partner[pid];
        if (q < 0 || static_cast<std::size_t>(q) < pid) continue;
        // each arc has exactly one subface occurrence
        int cy1 = std::max(an.occ[pid][0][0], an.occ[pid][1][0]);
        int cy2 = std::max(an.occ[q][0][0], an.occ[q][1][0]);
        if (cy1 < 0 || cy2 < 0) throw std::runtime_error("analyze: arc without subface occurrence");
        parent[find(cy1)] = find(cy2);
    }
    an.cycle_region.assign(an.cycles.size(), -1);
    std::map<int, int> region_id;
    for (std::size_t cy = 0; cy < an.cycles.size(); ++cy) {
        if (surf.face_marked(an.cycles[cy].face)) continue;
        int root = find(static_cast<int>(cy));
        auto it = region_id.find(root);
        if (it == region_id.end()) {
            int id = static_cast<int>(region_id.size());
            region_id[root] = id;
            an.cycle_region[cy] = id;
        } else {
            an.cycle_region[cy] = it->second;
        }
    }
    an.num_regions = static_cast<int>(region_id.size());
    return an;
}

// is this arc piece glued through (interior to some region)?
bool piece_glued(const Analysis& an, int pid) { return an.arc_partner[pid] >= 0; }

// the unique subface occurrence of an arc piece
std::array<int, 2> arc_occ(const Analysis& an, int pid) {
    return an.occ[pid][1][0] >= 0 ? an.occ[pid][1] : an.occ[pid][0];
}

struct BoundaryWalk {
    // circles of directed boundary pieces (chords and unglued arcs), as
    // (cycle, pos) occurrences
    std::vector<std::vector<std::array<int, 2>>> circles;
    std::vector<std::vector<int>> junction_nodes;  // per circle: node at the junction after entry i
};

std::array<int, 2> next_boundary(const Analysis& an, std::array<int, 2> at, int* junction_node) {
    // step to next occurrence in cycle, hopping through glued arcs
    auto step = [&](std::array<int, 2> o) {
        const Cycle& cy = an.cycles[o[0]];
        return std::array<int, 2>{o[0], static_cast<int>((o[1] + 1) % cy.dp.size())};
    };
    std::array<int, 2> cur = step(at);
    // junction node: tail of the piece we land on
    const DirPiece& first = an.cycles[cur[0]].dp[cur[1]];
    *junction_node = an.tail_node(first);
    int guard = 0;
    while (true) {
        const DirPiece& dp = an.cycles[cur[0]].dp[cur[1]];
        const Piece& pc = an.pieces[dp.piece];
        if (pc.is_chord || !piece_glued(an, dp.piece)) return cur;
        // hop
        int q = an.arc_partner[dp.piece];
        cur = step(arc_occ(an, q));
        if (++guard > 100000) throw std::runtime_error("boundary walk: hop loop");
    }
}

BoundaryWalk region_boundary(const Analysis& an, int region) {
    BoundaryWalk bw;
    std::set<std::array<int, 2>> todo;
    for (std::size_t cy = 0; cy < an.cycles.size(); ++cy) {
        if (an.cycle_region[cy] != region) continue;
        for (std::size_t pos = 0; pos < an.cycles[cy].dp.size(); ++pos) {
            const DirPiece& dp = an.cycles[cy].dp[pos];
            const Piece& pc = an.pieces[dp.piece];
            if (pc.is_chord || !piece_glued(an, dp.piece))
                todo.insert({static_cast<int>(cy), static_cast<int>(pos)});
        }
    }
    while (!todo.empty()) {
        auto start = *todo.begin();
        std::vector<std::array<int, 2>> circle;
        std::vector<int> junctions;
        auto cur = start;
        do {
            todo.erase(cur);
            circle.push_back(cur);
            int jn = -1;
            cur = next_boundary(an, cur, &jn);
            junctions.push_back(jn);
        } while (cur != start);
        bw.circles.push_back(std::move(circle));
        bw.junction_nodes.push_back(std::move(junctions));
    }
    return bw;
}

struct RegionStats {
    int faces = 0;
    int chi = 0;
    int corners = 0;        // crossing junctions over all circles
    bool pure_chords = true;  // every boundary piece is a curve arc
    BoundaryWalk bw;
};

RegionStats region_stats(const Analysis& an, int region) {
    RegionStats rs;
    std::vector<int> cycs;
    for (std::size_t cy = 0; cy < an.cycles.size(); ++cy)
        if (an.cycle_region[cy] == region) cycs.push_back(static_cast<int>(cy));
    rs.faces = static_cast<int>(cycs.size());

    // E and V via corner-slot union-find
    // corner slot id: global position offset per cycle + pos (slot between dp[pos-1] and dp[pos])
    std::map<int, int> cyc_offset;
    int total = 0;
    for (int cy : cycs) {
        cyc_offset[cy] = total;
        total += static_cast<int>(an.cycles[cy].dp.size());
    }
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto slot_of = [&](int cy, int pos) { return cyc_offset.at(cy) + pos; };

    int glued_pairs = 0, boundary_pieces = 0;
    for (int cy : cycs) {
        const Cycle& c = an.cycles[cy];
        for (std::size_t pos = 0; pos < c.dp.size(); ++pos) {
            const DirPiece& dp = c.dp[pos];
            const Piece& pc = an.pieces[dp.piece];
            if (!pc.is_chord && piece_glued(an, dp.piece)) {
                int q = an.arc_partner[dp.piece];
                auto oq = arc_occ(an, q);
                if (an.cycle_region[oq[0]] != region)
                    throw std::runtime_error("region_stats: partner outside region");
                if (dp.piece < q) ++glued_pairs;
                // identify tail(this) ~ head(partner), head(this) ~ tail(partner)
                int tail_slot = slot_of(cy, static_cast<int>(pos));
                int head_slot = slot_of(cy, static_cast<int>((pos + 1) % c.dp.size()));
                int p_tail_slot = slot_of(oq[0], oq[1]);
                int p_head_slot = slot_of(oq[0], static_cast<int>((oq[1] + 1) % an.cycles[oq[0]].dp.size()));
                parent[find(tail_slot)] = find(p_head_slot);
                parent[find(head_slot)] = find(p_tail_slot);
            } else {
                ++boundary_pieces;
                if (!pc.is_chord) rs.pure_chords = false;
            }
        }
    }
    int verts = 0;
    for (int i = 0; i < total; ++i)
        if (find(i) == i) ++verts;
    int edges = glued_pairs + boundary_pieces;
    rs.chi = verts - edges + rs.faces;

    rs.bw = region_boundary(an, region);
    for (const auto& junctions : rs.bw.junction_nodes)
        for (int jn : junctions)
            if (an.nodes[jn].kind == 2) ++rs.corners;
    return rs;
}

// ---------------------------------------------------------------- bigons

struct Bigon {
    int region;
    // runs: consecutive boundary occurrences between the two crossing
    // junctions; each run belongs to one curve
    std::vector<std::array<int, 2>> run_of_curve[2];  // indexed by scene curve id (pair scenes)
    int corner_node[2];
};

// find the lexicographically least removable bigon, or region -1
bool find_bigon(const Analysis& an, Bigon* out) {
    struct Cand {
        int key;  // min crossing id among corners
        Bigon b;
    };
    std::vector<Cand> cands;
    for (int r = 0; r < an.num_regions; ++r) {
        RegionStats rs = region_stats(an, r);
        if (rs.chi != 1 || rs.corners != 2 || !rs.pure_chords) continue;
        if (rs.bw.circles.size() != 1) continue;
        const auto& circle = rs.bw.circles[0];
        const auto& junctions = rs.bw.junction_nodes[0];
        // junction after entry i sits between circle[i] and circle[i+1]
        std::vector<int> corner_pos;
        for (std::size_t i = 0; i < junctions.size(); ++i)
            if (an.nodes[junctions[i]].kind == 2) corner_pos.push_back(static_cast<int>(i));
        if (corner_pos.size() != 2) continue;
        int n1 = junctions[corner_pos[0]], n2 = junctions[corner_pos[1]];
        if (an.nodes[n1].aux == an.nodes[n2].aux) continue;  // same crossing twice: not a bigon
        Bigon b;
        b.region = r;
        b.corner_node[0] = n1;
        b.corner_node[1] = n2;
        const int L = static_cast<int>(circle.size());
        auto curve_of_occ = [&](const std::array<int, 2>& o) {
            const DirPiece& dp = an.cycles[o[0]].dp[o[1]];
            return an.chords[an.pieces[dp.piece].chord].curve;
        };
        // run A: entries corner_pos[0]+1 .. corner_pos[1]; run B: the rest
        std::vector<std::array<int, 2>> runA, runB;
        for (int i = corner_pos[0] + 1; ; ++i) {
            int idx = i % L;
            runA.push_back(circle[idx]);
            if (idx == (corner_pos[1] + 0) % L) break;
        }
        for (int i = corner_pos[1] + 1; ; ++i) {
            int idx = i % L;
            runB.push_back(circle[idx]);
            if (idx == corner_pos[0] % L) break;
        }
        int ca = curve_of_occ(runA[0]), cb = curve_of_occ(runB[0]);
        if (ca == cb) continue;  // would need both sides on distinct curves
        for (const auto& o : runA)
            if (curve_of_occ(o) != ca) throw std::runtime_error("bigon: mixed run");
        for (const auto& o : runB)
            if (curve_of_occ(o) != cb) throw std::runtime_error("bigon: mixed run");
        b.run_of_curve[ca] = runA;
        b.run_of_curve[cb] = runB;
        long key = std::min(an.nodes[n1].aux, an.nodes[n2].aux);
        cands.push_back({static_cast<int>(key), b});
    }
    if (cands.empty()) return false;
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.key < b.key; });
    *out = cands[0].b;
    return true;
}

struct RunInfo {
    int curve;
    bool forward;            // run traverses the curve in its own orientation
    int seg_first, seg_last; // chord segs at the run's two ends (walk order)
    Rational s_first, s_last;  // crossing params at the corners (walk order)
    // events crossed inside the run, in walk order, with walk crossing slot
    std::vector<std::pair<int, int>> events;  // (event index, from_slot as walked)
    std::vector<std::array<int, 2>> occs;
};

RunInfo digest_run(const Analysis& an, const std::vector<std::array<int, 2>>& run) {
    RunInfo ri;
    ri.occs = run;
    auto piece_of = [&](const std::array<int, 2>& o) -> const Piece& {
        return an.pieces[an.cycles[o[0]].dp[o[1]].piece];
    };
    auto dirp_of = [&](const std::array<int, 2>& o) -> const DirPiece& { return an.cycles[o[0]].dp[o[1]]; };
    const Piece& p0 = piece_of(run[0]);
    ri.curve = an.chords[p0.chord].curve;
    const CombCurve& cur = an.scene->curves[ri.curve];
    const int n = cur.size();

    auto params = [&](const std::array<int, 2>& o) {
        const DirPiece& dp = dirp_of(o);
        const Piece& pc = piece_of(o);
        return dp.fwd ? std::array<Rational, 2>{pc.su, pc.sv} : std::array<Rational, 2>{pc.sv, pc.su};
    };
    auto seg_of = [&](const std::array<int, 2>& o) { return an.chords[piece_of(o).chord].seg; };

    auto pr0 = params(run[0]);
    ri.forward = pr0[1] > pr0[0];
    ri.seg_first = seg_of(run[0]);
    ri.s_first = pr0[0];
    auto prL = params(run.back());
    ri.seg_last = seg_of(run.back());
    ri.s_last = prL[1];

    for (std::size_t i = 0; i + 1 < run.size(); ++i) {
        int sa = seg_of(run[i]), sb = seg_of(run[i + 1]);
        int ev, slot;
        if (ri.forward) {
            if ((sa + 1) % n != sb) throw std::runtime_error("digest_run: non-contiguous run");
            ev = (sa + 1) % n;
            slot = cur.events[ev].from_slot;
        } else {
            if ((sb + 1) % n != sa) throw std::runtime_error("digest_run: non-contiguous run");
            ev = sa;
            slot = 1 - cur.events[ev].from_slot;
        }
        ri.events.push_back({ev, slot});
    }
    return ri;
}

// gap to nearest other scene point in the given direction, halved
Rational offset_delta(const std::map<int, std::vector<Rational>>& pts, int edge, const Rational& t, int dir) {
    Rational best = dir > 0 ? Rational(1) - t : t;
    auto it = pts.find(edge);
    if (it != pts.end())
        for (const auto& p : it->second) {
            if (p == t) continue;
            if (dir > 0 && p > t && p - t < best) best = p - t;
            if (dir < 0 && p < t && t - p < best) best = t - p;
        }
    if (best.is_zero()) throw std::runtime_error("offset_delta: no room");
    return best * Rational(1, 2);
}

// Replace the moved curve's side of the bigon by an offset copy of the fixed
// curve's side, pushed to the far side.
void remove_bigon(Scene& s, const Analysis& an, const Bigon& b, int moved_curve) {
    const int fixed_curve = 1 - moved_curve;
    RunInfo rm = digest_run(an, b.run_of_curve[moved_curve]);
    RunInfo rf = digest_run(an, b.run_of_curve[fixed_curve]);
    const CombCurve& mc = s.curves[moved_curve];
    const CombCurve& fc = s.curves[fixed_curve];
    const int nm = mc.size();

    // moved-curve arc to replace, in the moved curve's own orientation:
    // from crossing C_in (on seg a) to crossing C_out (on seg bseg)
    int a_seg = rm.forward ? rm.seg_first : rm.seg_last;
    int b_seg = rm.forward ? rm.seg_last : rm.seg_first;

    // splice: offset copies of the fixed run's interior events, ordered to go
    // C_in -> C_out in the moved curve's orientation. The fixed run (walk
    // order) goes from the opposite corner; the walk traverses the two runs
    // head-to-tail, so the fixed run in walk order already travels from the
    // moved run's walk-end corner back to its walk-start corner. Orient the
    // splice to follow the moved curve.
    std::vector<std::pair<int, int>> splice_events = rf.events;  // (ev, slot) walk order
    // the walk goes corner1 -> (runX) -> corner2 -> (runY) -> corner1; the
    // moved curve's replacement must run from its own entry corner to exit
    // corner. In walk order the fixed run starts where the moved run ended.
    bool reverse_splice = rm.forward;  // moved run forward: moved curve goes walk-start->walk-end;
                                       // fixed run walks end->start, so reverse it
    if (reverse_splice) {
        std::reverse(splice_events.begin(), splice_events.end());
        for (auto& [ev, slot] : splice_events) slot = 1 - slot;
    }

    // offsets: away from the bigon = right of the fixed run's walk direction.
    auto pts = edge_points(s);
    std::vector<CurveEvent> splice;
    // locate each fixed event's walk piece to take the geometric right side
    // walk order events: rf.events[i] sits between rf.occs[i] and rf.occs[i+1]
    std::vector<CurveEvent> walk_splice;
    for (std::size_t i = 0; i < rf.events.size(); ++i) {
        auto [ev, slot] = rf.events[i];
        const CurveEvent& fe = fc.events[ev];
        // piece before the junction, directed by walk
        const DirPiece& dp = an.cycles[rf.occs[i][0]].dp[rf.occs[i][1]];
        const Piece& pc = an.pieces[dp.piece];
        Point u = an.nodes[dp.fwd ? pc.u : pc.v].p;
        Point v = an.nodes[dp.fwd ? pc.v : pc.u].p;
        // node v is the event point seen in the face of that piece; find its slot
        // candidate offsets in canonical t
        int vslot = -1;
        {
            const CombCurve& cc = fc;
            const CurveEvent& e2 = cc.events[ev];
            const SurfEdge& ed = s.surf->edge(e2.edge);
            // whichever slot's embedding equals v
            for (int sl = 0; sl < 2; ++sl)
                if (ed.side[sl].valid() && s.surf->embed(e2.edge, e2.t, sl) == v) vslot = sl;
        }
        if (vslot < 0) throw std::runtime_error("remove_bigon: lost event node");
        Rational d_up = offset_delta(pts, fe.edge, fe.t, +1);
        Rational d_dn = offset_delta(pts, fe.edge, fe.t, -1);
        Point cand_up = s.surf->embed(fe.edge, fe.t + d_up, vslot);
        bool up_is_right = cross(v - u, cand_up - v) < Rational(0);
        Rational nt = up_is_right ? fe.t + d_up : fe.t - d_dn;
        CurveEvent ne;
        ne.edge = fe.edge;
        ne.t = nt;
        ne.from_slot = 0;  // filled below from walk slots
        walk_splice.push_back(ne);
    }
    // attach slots in splice order
    std::vector<CurveEvent> splice_final;
    for (std::size_t i = 0; i < splice_events.size(); ++i) {
        std::size_t src = reverse_splice ? splice_events.size() - 1 - i : i;
        CurveEvent ne = walk_splice[src];
        ne.from_slot = splice_events[i].second;
        splice_final.push_back(ne);
    }

    // retained moved events: (b_seg + 1 .. a_seg) cyclically, then splice
    std::vector<CurveEvent> out;
    for (int k = (b_seg + 1) % nm;; k = (k + 1) % nm) {
        out.push_back(mc.events[k]);
        if (k == a_seg) break;
    }
    // sanity: removed = events strictly between a_seg and b_seg
    std::size_t removed = rm.events.size();
    if (out.size() + removed != static_cast<std::size_t>(nm))
        throw std::runtime_error("remove_bigon: event bookkeeping mismatch");
    for (const auto& e : splice_final) out.push_back(e);

    if (out.size() < 2) throw std::runtime_error("remove_bigon: degenerate result");
    s.curves[moved_curve] = make_curve(mc.surface, out, mc.label);
}

int count_pair_crossings(const Analysis& an) { return static_cast<int>(an.crossings.size()); }

void require_same_surface(const CombCurve& a, const CombCurve& b) {
    if (a.surface.get() != b.surface.get())
        throw std::invalid_argument("curves live on different complexes");
}

} // namespace

int raw_crossings(const CombCurve& a, const CombCurve& b) {
    require_same_surface(a, b);
    int count = 0;
    std::map<int, std::vector<int>> bf;
    for (int k = 0; k < b.size(); ++k) bf[b.face_after(k)].push_back(k);
    for (int k = 0; k < a.size(); ++k) {
        auto it = bf.find(a.face_after(k));
        if (it == bf.end()) continue;
        for (int m : it->second) {
            SegCross sc = segment_cross(a.chord_start(k), a.chord_end(k), b.chord_start(m), b.chord_end(m));
            if (sc.crosses) ++count;
        }
    }
    return count;
}

Int algebraic_intersection(const CombCurve& a, const CombCurve& b) {
    require_same_surface(a, b);
    Scene s{a.surface, {a, b}};
    genericize(s);
    Int sum = 0;
    const CombCurve &ca = s.curves[0], &cb = s.curves[1];
    std::map<int, std::vector<int>> bf;
    for (int k = 0; k < cb.size(); ++k) bf[cb.face_after(k)].push_back(k);
    for (int k = 0; k < ca.size(); ++k) {
        auto it = bf.find(ca.face_after(k));
        if (it == bf.end()) continue;
        for (int m : it->second) {
            Point a0 = ca.chord_start(k), a1 = ca.chord_end(k);
            Point b0 = cb.chord_start(m), b1 = cb.chord_end(m);
            SegCross sc = segment_cross(a0, a1, b0, b1);
            if (!sc.crosses) continue;
            sum += cross(a1 - a0, b1 - b0) > Rational(0) ? 1 : -1;
        }
    }
    return sum;
}

PairPosition minimal_position(const CombCurve& c1, const CombCurve& c2) {
    require_same_surface(c1, c2);
    Scene s{c1.surface, {c1, c2}};
    genericize(s);
    int prev = -1;
    for (int iter = 0; iter < 100000; ++iter) {
        Analysis an = analyze(s);
        Bigon b;
        if (!find_bigon(an, &b))
            return {s.curves[0], s.curves[1], count_pair_crossings(an)};
        int now = count_pair_crossings(an);
        if (prev >= 0 && now > prev) throw std::runtime_error("minimal_position: count increased");
        prev = now;
        remove_bigon(s, an, b, 1);
        genericize(s);
        Analysis check = analyze(s);
        if (count_pair_crossings(check) >= now)
            throw std::runtime_error("minimal_position: bigon removal did not reduce crossings");
    }
    throw std::runtime_error("minimal_position: did not terminate");
}

int geometric_intersection(const CombCurve& c1, const CombCurve& c2) {
    return minimal_position(c1, c2).crossings;
}

bool pair_is_minimal(const CombCurve& c1, const CombCurve& c2) {
    require_same_surface(c1, c2);
    Scene s{c1.surface, {c1, c2}};
    if (!scene_is_generic(s))
        throw std::invalid_argument("pair_is_minimal: curves are not in transverse position");
    Analysis an = analyze(s);
    Bigon b;
    return !find_bigon(an, &b);
}

int complement_components(const std::vector<CombCurve>& curves) {
    if (curves.empty()) throw std::invalid_argument("complement_components: empty system");
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j)
            if (!pair_is_minimal(curves[i], curves[j]))
                throw std::invalid_argument("complement_components: curves are not bigon-free");
    Scene s{curves[0].surface, curves};
    if (!scene_is_generic(s))
        throw std::invalid_argument("complement_components: curves are not in transverse position");
    Analysis an = analyze(s);
    return an.num_regions;
}

RegionSummary region_summary(const std::vector<CombCurve>& curves) {
    if (curves.empty()) throw std::invalid_argument("region_summary: empty system");
    Scene s{curves[0].surface, curves};
    if (!scene_is_generic(s))
        throw std::invalid_argument("region_summary: curves are not in transverse position");
    const CellSurface& surf = *s.surf;
    Analysis an = analyze(s);
    RegionSummary out;
    out.num_regions = an.num_regions;
    out.marked_in_region.assign(an.num_regions, 0);
    out.touches_boundary.assign(an.num_regions, false);

    // region of each face's subfaces; marked cells attribute to the region
    // across their edges
    for (int f = 0; f < surf.num_faces(); ++f) {
        if (!surf.face_marked(f)) continue;
        int attributed = -1;
        for (int i = 0; i < surf.face_size(f); ++i) {
            int e = surf.edge_at(f, i);
            const SurfEdge& ed = surf.edge(e);
            if (ed.boundary()) continue;
            int other = ed.side[0].face == f && ed.side[0].index == i ? 1 : 0;
            int of = ed.side[other].face;
            if (surf.face_marked(of)) continue;
            // find a subface of face `of` whose cycle has an arc on edge e
            for (std::size_t cy = 0; cy < an.cycles.size(); ++cy) {
                if (an.cycles[cy].face != of) continue;
                for (const auto& dp : an.cycles[cy].dp) {
                    const Piece& pc = an.pieces[dp.piece];
                    if (!pc.is_chord && pc.edge == e) {
                        int r = an.cycle_region[cy];
                        if (attributed == -1) attributed = r;
                        else if (attributed != r)
                            throw std::runtime_error("region_summary: inconsistent marked attribution");
                    }
                }
            }
        }
        if (attributed >= 0) ++out.marked_in_region[attributed];
    }

    for (std::size_t cy = 0; cy < an.cycles.size(); ++cy) {
        int r = an.cycle_region[cy];
        if (r < 0) continue;
        for (const auto& dp : an.cycles[cy].dp) {
            const Piece& pc = an.pieces[dp.piece];
            if (!pc.is_chord && surf.edge(pc.edge).boundary()) out.touches_boundary[r] = true;
        }
    }
    return out;
}

} // namespace mcgforge
