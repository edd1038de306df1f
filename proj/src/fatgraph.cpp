#include "mcgforge/fatgraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mcgforge {

std::vector<std::array<int, 2>> FatGraph::edges() const {
    std::vector<std::array<int, 2>> e;
    for (int h = 0; h < num_half_edges(); ++h)
        if (h < pairing[h]) e.push_back({h, pairing[h]});
    return e;
}

int FatGraph::edge_of_half(int h) const {
    int lo = std::min(h, pairing[h]);
    int idx = 0;
    for (int x = 0; x < lo; ++x)
        if (x < pairing[x]) ++idx;
    return idx;
}

bool FatGraph::trivalent() const {
    for (const auto& r : rotation)
        if (r.size() != 3) return false;
    return true;
}

bool FatGraph::connected() const {
    if (num_vertices == 0) return false;
    std::vector<bool> seen(num_vertices, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int h : rotation[v]) {
            int w = vertex_of[pairing[h]];
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

void FatGraph::validate() const {
    int nh = num_half_edges();
    if (nh % 2) throw std::invalid_argument("FatGraph: odd number of half-edges");
    if (static_cast<int>(pairing.size()) != nh) throw std::invalid_argument("FatGraph: bad pairing size");
    for (int h = 0; h < nh; ++h) {
        if (pairing[h] == h || pairing[pairing[h]] != h)
            throw std::invalid_argument("FatGraph: pairing is not a fixed-point-free involution");
        if (vertex_of[h] < 0 || vertex_of[h] >= num_vertices)
            throw std::invalid_argument("FatGraph: half-edge vertex out of range");
    }
    std::vector<int> seen(nh, 0);
    if (static_cast<int>(rotation.size()) != num_vertices)
        throw std::invalid_argument("FatGraph: rotation size mismatch");
    for (int v = 0; v < num_vertices; ++v)
        for (int h : rotation[v]) {
            if (vertex_of[h] != v) throw std::invalid_argument("FatGraph: rotation lists foreign half-edge");
            if (seen[h]++) throw std::invalid_argument("FatGraph: half-edge repeated in rotation");
        }
    for (int h = 0; h < nh; ++h)
        if (!seen[h]) throw std::invalid_argument("FatGraph: half-edge missing from rotation");
}

namespace {

struct Builder {
    FatGraph g;
    std::vector<std::vector<int>> pending;  // per vertex, half-edges in rotation order

    explicit Builder(int nv) {
        g.num_vertices = nv;
        pending.resize(nv);
    }
    // returns half-edge id attached at v (appended to v's rotation)
    int attach(int v) {
        int h = static_cast<int>(g.vertex_of.size());
        g.vertex_of.push_back(v);
        g.pairing.push_back(-1);
        pending[v].push_back(h);
        return h;
    }
    void add_edge(int v, int w) {
        int h1 = attach(v), h2 = attach(w);
        g.pairing[h1] = h2;
        g.pairing[h2] = h1;
    }
    FatGraph finish() {
        g.rotation = pending;
        g.validate();
        return g;
    }
};

} // namespace

FatGraph build_gamma(int g) {
    if (g < 2) throw std::invalid_argument("build_gamma: requires g >= 2");
    const int n = 2 * g - 2;  // even
    Builder b(n);
    // We attach half-edges per vertex in rotation order (prev, antipode, next),
    // so create them vertex by vertex and pair afterwards.
    std::vector<std::array<int, 3>> slots(n);
    for (int v = 0; v < n; ++v) {
        slots[v][0] = b.attach(v);  // towards v-1
        slots[v][1] = b.attach(v);  // towards antipode
        slots[v][2] = b.attach(v);  // towards v+1
    }
    auto pair = [&](int h1, int h2) {
        b.g.pairing[h1] = h2;
        b.g.pairing[h2] = h1;
    };
    for (int v = 0; v < n; ++v) pair(slots[v][2], slots[(v + 1) % n][0]);
    for (int v = 0; v < n / 2; ++v) pair(slots[v][1], slots[v + n / 2][1]);
    return b.finish();
}

FatGraph build_flower(int g) {
    if (g < 2) throw std::invalid_argument("build_flower: requires g >= 2");
    const int leaves = g;
    const int internals = g - 2;
    Builder b(2 * g - 2);
    // vertices 0..g-1: leaf (loop) vertices; g..2g-3: internal path
    auto leaf = [&](int k) { return k; };
    auto internal = [&](int k) { return g + k; };

    // loops first so leaf slots 0,1 are the loop
    for (int k = 0; k < leaves; ++k) b.add_edge(leaf(k), leaf(k));

    if (internals == 0) {
        // g == 2: two loop vertices joined directly
        b.add_edge(leaf(0), leaf(1));
    } else if (g == 3) {
        // one internal vertex carrying all three leaves
        for (int k = 0; k < 3; ++k) b.add_edge(leaf(k), internal(0));
    } else {
        // leaf attachments: internal 0 gets leaves 0,1; internal k (middle)
        // gets leaf k+1; last internal gets leaves g-2, g-1
        b.add_edge(leaf(0), internal(0));
        b.add_edge(leaf(1), internal(0));
        for (int k = 1; k < internals - 1; ++k) b.add_edge(leaf(k + 1), internal(k));
        b.add_edge(leaf(g - 2), internal(internals - 1));
        b.add_edge(leaf(g - 1), internal(internals - 1));
        for (int k = 0; k + 1 < internals; ++k) b.add_edge(internal(k), internal(k + 1));
    }
    return b.finish();
}

bool edge_removal_connected(const FatGraph& g, int edge) {
    auto es = g.edges();
    if (edge < 0 || edge >= static_cast<int>(es.size()))
        throw std::invalid_argument("edge_removal_connected: edge out of range");
    int u = g.vertex_of[es[edge][0]];
    int v = g.vertex_of[es[edge][1]];

    // pieces = surviving edges; connect two pieces sharing a surviving vertex
    std::vector<int> piece;  // index into es, surviving only
    for (int e = 0; e < static_cast<int>(es.size()); ++e) {
        if (e == edge) continue;
        int a = g.vertex_of[es[e][0]], b2 = g.vertex_of[es[e][1]];
        bool a_alive = (a != u && a != v), b_alive = (b2 != u && b2 != v);
        if (a_alive || b_alive) piece.push_back(e);
    }
    if (piece.empty()) return false;  // empty remainder (degenerate, e.g. theta)

    // union-find over pieces keyed by surviving vertices
    std::map<int, int> vert_first;  // vertex -> first piece index touching it
    std::vector<int> parent(piece.size());
    for (std::size_t i = 0; i < piece.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t i = 0; i < piece.size(); ++i) {
        int e = piece[i];
        for (int h : es[e]) {
            int w = g.vertex_of[h];
            if (w == u || w == v) continue;
            auto it = vert_first.find(w);
            if (it == vert_first.end())
                vert_first[w] = static_cast<int>(i);
            else
                parent[find(static_cast<int>(i))] = find(it->second);
        }
    }
    int root = find(0);
    for (std::size_t i = 1; i < piece.size(); ++i)
        if (find(static_cast<int>(i)) != root) return false;
    return true;
}

} // namespace mcgforge
