#include "pturan/theta_extract.hpp"

#include <algorithm>
#include <set>

#include "pturan/circuit_graph.hpp"

namespace pturan {

namespace {

int count_inside(const PlaneGraph& g, const Cycle& c) {
    auto outside = faces_outside_cycle(g, c);
    int inside = 0;
    for (char o : outside)
        if (!o) ++inside;
    return inside;
}

}  // namespace

ThetaWitness find_theta(const PlaneGraph& g, int k, std::optional<Cycle> seed, Budget* budget) {
    if (k < 4) throw Error("find_theta requires k >= 4");
    if (!is_near_triangulation(g)) throw Error("find_theta requires a near triangulation");

    Cycle c;
    if (seed) {
        c = *seed;
        if (!cycle_witness_valid(g, c, static_cast<int>(c.size())))
            throw Error("find_theta: seed is not a cycle of g");
    } else {
        auto [len, longest] = circumference(g, budget);
        c = longest;
    }
    if (static_cast<int>(c.size()) < k) throw NoLongCycle(k);

    int measure = count_inside(g, c);
    while (true) {
        int len = static_cast<int>(c.size());
        std::set<std::pair<int, int>> c_edges;
        for (int i = 0; i < len; ++i)
            c_edges.insert({std::min(c[i], c[(i + 1) % len]), std::max(c[i], c[(i + 1) % len])});
        auto outside = faces_outside_cycle(g, c);
        std::set<int> on_c(c.begin(), c.end());
        auto inside_face_of = [&](int u, int v) {
            int f = g.face_left_of(u, v);
            if (!outside[f]) return f;
            return g.face_left_of(v, u);
        };

        if (len == k) {
            // (a): chord across a cycle vertex, scanned by vertex label
            int pick = -1;
            for (int i = 0; i < len; ++i) {
                int v = c[i], u = c[(i + len - 1) % len], w = c[(i + 1) % len];
                if (g.has_edge(u, w) && (pick < 0 || c[pick] > v)) pick = i;
            }
            if (pick >= 0) {
                int u = c[(pick + len - 1) % len], w = c[(pick + 1) % len];
                return ThetaWitness{c, {std::min(u, w), std::max(u, w)}};
            }
        } else {
            // (b): bypass a vertex whose two cycle edges bound one interior triangle
            int pick = -1;
            for (int i = 0; i < len; ++i) {
                int v = c[i], u = c[(i + len - 1) % len], w = c[(i + 1) % len];
                int f1 = inside_face_of(u, v), f2 = inside_face_of(v, w);
                if (f1 != f2 || g.faces().walks[f1].size() != 3) continue;
                if (pick < 0 || c[pick] > v) pick = i;
            }
            if (pick >= 0) {
                Cycle next;
                for (int i = 0; i < len; ++i)
                    if (i != pick) next.push_back(c[i]);
                c = std::move(next);
                int nm = count_inside(g, c);
                if (nm != measure - 1)
                    throw InternalInvariantBroken("theta bypass did not remove one face");
                measure = nm;
                continue;
            }
        }

        // (c): expand an edge through an interior triangle with inner apex
        std::pair<int, int> best{-1, -1};
        int best_apex = -1, best_pos = -1;
        for (int i = 0; i < len; ++i) {
            int u = c[i], v = c[(i + 1) % len];
            int f = inside_face_of(u, v);
            const Walk& w = g.faces().walks[f];
            if (w.size() != 3) continue;
            int apex = -1;
            for (int z : w)
                if (z != u && z != v) apex = z;
            if (on_c.count(apex)) continue;
            std::pair<int, int> key{std::min(u, v), std::max(u, v)};
            if (best_pos < 0 || key < best) {
                best = key;
                best_apex = apex;
                best_pos = i;
            }
        }
        if (best_pos < 0) throw DichotomyViolated();
        Cycle next;
        for (int i = 0; i < len; ++i) {
            next.push_back(c[i]);
            if (i == best_pos) next.push_back(best_apex);
        }
        c = std::move(next);
        int nm = count_inside(g, c);
        if (nm != measure - 1)
            throw InternalInvariantBroken("theta expansion did not remove one face");
        measure = nm;
        if (budget) budget->tick();
    }
}

}  // namespace pturan
