#include "pturan/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pturan {

namespace {

// rotate a cyclic list so it starts at `first`
std::vector<int> rotate_to(const std::vector<int>& cyc, int first) {
    auto it = std::find(cyc.begin(), cyc.end(), first);
    if (it == cyc.end()) throw Error("rotate_to: element missing");
    std::vector<int> out(it, cyc.end());
    out.insert(out.end(), cyc.begin(), it);
    return out;
}

int walk_successor(const Walk& walk, int v) {
    for (size_t i = 0; i < walk.size(); ++i)
        if (walk[i] == v) return walk[(i + 1) % walk.size()];
    throw Error("walk_successor: vertex not on walk");
}

}  // namespace

PlaneGraph triangle_fixture() {
    return PlaneGraph({{1, 2}, {0, 2}, {0, 1}}, Walk{0, 1, 2});
}

PlaneGraph k4_fixture() {
    return PlaneGraph({{1, 3, 2}, {3, 0, 2}, {1, 0, 3}, {2, 0, 1}}, Walk{1, 3, 2});
}

PlaneGraph insert_apex(const PlaneGraph& g, const Walk& face_walk) {
    // locate the traced face matching the request
    const FaceSet& fs = g.faces();
    int fi = -1;
    for (int i = 0; i < fs.size(); ++i)
        if (same_cyclic(face_walk, fs.walks[i])) {
            fi = i;
            break;
        }
    if (fi < 0) throw Error("insert_apex: not a face");
    const Walk& w = fs.walks[fi];

    auto rotation = g.rotations();
    int z = g.vertex_count();
    rotation.emplace_back(w.rbegin(), w.rend());
    int m = static_cast<int>(w.size());
    for (int i = 0; i < m; ++i) {
        int a = w[i], b = w[(i + 1) % m];
        auto& rb = rotation[b];
        auto it = std::find(rb.begin(), rb.end(), a);
        rb.insert(it + 1, z);
    }
    std::optional<Walk> outer;
    if (g.has_outer() && fs.outer != fi) outer = g.outer_walk();
    if (g.has_outer() && fs.outer == fi) outer = Walk{w[0], w[1], z};
    return PlaneGraph(std::move(rotation), outer);
}

PlaneGraph stacked_triangulation(int v) {
    if (v < 3) throw Error("stacked_triangulation requires v >= 3");
    PlaneGraph g = triangle_fixture();
    while (g.vertex_count() < v) {
        const FaceSet& fs = g.faces();
        int pick = -1;
        std::vector<int> pick_key;
        for (int i = 0; i < fs.size(); ++i) {
            if (i == fs.outer) continue;
            std::vector<int> key(fs.walks[i]);
            std::sort(key.begin(), key.end());
            if (pick < 0 || key < pick_key) {
                pick = i;
                pick_key = key;
            }
        }
        g = insert_apex(g, fs.walks[pick]);
    }
    return g;
}

PlaneGraph kleetope(const PlaneGraph& base, int iterations) {
    if (iterations < 0) throw Error("kleetope: iterations must be >= 0");
    // base must be a triangulation
    for (const Walk& w : base.faces().walks)
        if (w.size() != 3) throw Error("kleetope: base is not a triangulation");

    PlaneGraph g = base;
    for (int it = 0; it < iterations; ++it) {
        const FaceSet fs = g.faces();
        auto rotation = g.rotations();
        int z = g.vertex_count();
        int outer_apex = -1;
        for (int fi = 0; fi < fs.size(); ++fi, ++z) {
            const Walk& w = fs.walks[fi];
            rotation.emplace_back(w.rbegin(), w.rend());
            for (size_t i = 0; i < w.size(); ++i) {
                int a = w[i], b = w[(i + 1) % w.size()];
                auto& rb = rotation[b];
                auto itr = std::find(rb.begin(), rb.end(), a);
                rb.insert(itr + 1, z);
            }
            if (fi == fs.outer) outer_apex = z;
        }
        std::optional<Walk> outer;
        if (outer_apex >= 0) {
            const Walk& ow = fs.outer_walk();
            outer = Walk{ow[0], ow[1], outer_apex};
        }
        g = PlaneGraph(std::move(rotation), outer);
    }
    return g;
}

namespace {

struct ChainState {
    std::vector<std::vector<int>> rotation;
    Walk outer;
    std::pair<int, int> designated;  // u->v consecutive on outer
};

// Glues three copies around the designated edge per the GluingSpec chain
// u = b_1, a_1 = j_1 = b_2, a_2 = j_2 = b_3, a_3 = v; the quadrilateral
// (u, j_1, j_2, v) becomes an interior face with all copies outside it.
void glue_three_copies(ChainState& ch, const PlaneGraph& copy, std::pair<int, int> copy_edge) {
    int vb = copy.vertex_count();
    const Walk cw = copy.outer_walk();
    int a = copy_edge.first, b = copy_edge.second;
    if (walk_successor(cw, a) != b) throw Error("glue: copy edge not on its outer walk");

    int u = ch.designated.first, v = ch.designated.second;
    if (walk_successor(ch.outer, u) != v) throw Error("glue: host edge not on outer walk");

    int next_label = static_cast<int>(ch.rotation.size());
    // label maps per copy; junctions shared between consecutive copies
    std::vector<std::vector<int>> map(3, std::vector<int>(vb, -1));
    int j1 = next_label++, j2 = next_label++;
    map[0][b] = u;
    map[0][a] = j1;
    map[1][b] = j1;
    map[1][a] = j2;
    map[2][b] = j2;
    map[2][a] = v;
    for (int c = 0; c < 3; ++c)
        for (int x = 0; x < vb; ++x)
            if (map[c][x] < 0) map[c][x] = next_label++;

    ch.rotation.resize(next_label);

    auto mapped_rot = [&](int c, int x, int start) {
        std::vector<int> r = rotate_to(copy.rotation(x), start);
        for (int& y : r) y = map[c][y];
        return r;
    };

    // interior copy vertices keep their rotations verbatim
    for (int c = 0; c < 3; ++c)
        for (int x = 0; x < vb; ++x) {
            if (x == a || x == b) continue;
            std::vector<int> r = copy.rotation(x);
            for (int& y : r) y = map[c][y];
            ch.rotation[map[c][x]] = std::move(r);
        }

    int succ_b = walk_successor(cw, b);

    // u: copy1 fan (from b), then the old fan starting at v
    {
        std::vector<int> merged = mapped_rot(0, b, succ_b);
        auto old_rot = rotate_to(ch.rotation[u], v);
        merged.insert(merged.end(), old_rot.begin(), old_rot.end());
        ch.rotation[u] = std::move(merged);
    }
    // j1: copy2 fan (from b), then copy1 fan at a starting toward b->u
    {
        std::vector<int> merged = mapped_rot(1, b, succ_b);
        auto c1 = mapped_rot(0, a, b);
        merged.insert(merged.end(), c1.begin(), c1.end());
        ch.rotation[j1] = std::move(merged);
    }
    // j2: copy3 fan (from b), then copy2 fan at a
    {
        std::vector<int> merged = mapped_rot(2, b, succ_b);
        auto c2 = mapped_rot(1, a, b);
        merged.insert(merged.end(), c2.begin(), c2.end());
        ch.rotation[j2] = std::move(merged);
    }
    // v: old fan (from walk successor), then copy3 fan at a
    {
        int wn = walk_successor(ch.outer, v);
        std::vector<int> merged = rotate_to(ch.rotation[v], wn);
        auto c3 = mapped_rot(2, a, b);
        merged.insert(merged.end(), c3.begin(), c3.end());
        ch.rotation[v] = std::move(merged);
    }

    // outer walk: expand the u->v step with the three copy arcs
    auto arc = [&](int c) {
        // copy boundary from b around to a, avoiding the designated edge
        Walk w = rotate_to(cw, b);
        Walk out;
        for (int x : w) out.push_back(map[c][x]);
        return out;  // starts at image of b, ends at image of a
    };
    Walk new_outer;
    Walk old = rotate_to(ch.outer, u);  // starts u, next is v
    new_outer.push_back(u);
    for (int c = 0; c < 3; ++c) {
        Walk piece = arc(c);
        new_outer.insert(new_outer.end(), piece.begin() + 1, piece.end());
    }
    new_outer.insert(new_outer.end(), old.begin() + 2, old.end());
    ch.outer = std::move(new_outer);

    // next designated edge: first boundary edge of the middle copy's arc
    ch.designated = {j1, map[1][succ_b]};
}

}  // namespace

CircuitGraph sharp_chain(int t, int iterations) {
    if (t < 4) throw Error("sharp_chain requires t >= 4");
    if (iterations < 0) throw Error("sharp_chain: iterations must be >= 0");
    PlaneGraph seed = stacked_triangulation(t - 1);
    PlaneGraph copy = seed;

    ChainState ch{seed.rotations(), seed.outer_walk(), {seed.outer_walk()[0], seed.outer_walk()[1]}};
    std::pair<int, int> copy_edge{copy.outer_walk()[0], copy.outer_walk()[1]};
    for (int i = 0; i < iterations; ++i) glue_three_copies(ch, copy, copy_edge);

    PlaneGraph glued(ch.rotation, ch.outer);
    return validate_circuit_graph(glued, ch.outer);
}

PlaneGraph substitute(const PlaneGraph& host, const PlaneGraph& block,
                      const std::vector<int>& face_triangle) {
    for (int v = 0; v < host.vertex_count(); ++v)
        if (host.degree(v) != 2 && host.degree(v) != 3)
            throw Error("substitute: host degree " + std::to_string(host.degree(v)) + " at vertex " +
                        std::to_string(v) + " (must be 2 or 3)");
    if (face_triangle.size() != 3) throw Error("substitute: face_triangle must have 3 vertices");

    // the designated triangle must bound a face of the block
    const FaceSet& bfs = block.faces();
    int fi = -1;
    for (int i = 0; i < bfs.size(); ++i)
        if (same_cyclic(face_triangle, bfs.walks[i])) {
            fi = i;
            break;
        }
    if (fi < 0) throw Error("substitute: face_triangle is not facial in the block");
    const Walk attach = bfs.walks[fi];  // clockwise boundary of the copies as placed

    int vb = block.vertex_count();
    int nh = host.vertex_count();
    auto host_edges = host.edges();
    int eh = static_cast<int>(host_edges.size());
    std::map<std::pair<int, int>, int> midpoint;
    for (int i = 0; i < eh; ++i) midpoint[host_edges[i]] = nh * vb + i;

    std::vector<std::vector<int>> rotation(nh * vb + eh);

    auto copy_label = [&](int w, int x) { return w * vb + x; };

    for (int w = 0; w < nh; ++w) {
        // block copy with its own rotations
        for (int x = 0; x < vb; ++x) {
            std::vector<int> r = block.rotation(x);
            for (int& y : r) y = copy_label(w, y);
            rotation[copy_label(w, x)] = std::move(r);
        }
        // attach neighbors in rotation order to the triangle vertices in
        // outer-walk order
        const auto& nbrs = host.rotation(w);
        for (size_t i = 0; i < nbrs.size(); ++i) {
            int x = nbrs[i];
            int att = attach[i];  // block-local attachment vertex
            int mid = midpoint[{std::min(w, x), std::max(w, x)}];
            // insert the midpoint into the attachment's outer gap: after the
            // walk predecessor of att on the attach triangle
            int pred = attach[(std::find(attach.begin(), attach.end(), att) - attach.begin() + 2) % 3];
            auto& r = rotation[copy_label(w, att)];
            auto it = std::find(r.begin(), r.end(), copy_label(w, pred));
            r.insert(it + 1, mid);
            rotation[mid].push_back(copy_label(w, att));
        }
    }
    return PlaneGraph(std::move(rotation));
}

PlaneGraph figure2_fixture() {
    std::vector<std::vector<int>> rotation = {
        {1, 3, 2},                // 0: the center, inside the K_4 core
        {6, 3, 0, 2, 4, 7, 12},   // 1
        {4, 1, 0, 3, 5, 9, 8},    // 2
        {5, 2, 0, 1, 6, 11, 10},  // 3
        {2, 8, 7, 1},             // 4
        {3, 10, 9, 2},            // 5
        {1, 12, 11, 3},           // 6
        {1, 4},                   // 7
        {4, 2},                   // 8
        {2, 5},                   // 9
        {5, 3},                   // 10
        {3, 6},                   // 11
        {6, 1},                   // 12
    };
    Walk outer{7, 4, 8, 2, 9, 5, 10, 3, 11, 6, 12, 1};
    return PlaneGraph(std::move(rotation), outer);
}

}  // namespace pturan
