#pragma once

#include <random>
#include <set>
#include <vector>

#include "pturan/circuit_graph.hpp"
#include "pturan/constructions.hpp"
#include "pturan/plane_graph.hpp"

namespace pturan::testing {

// plane 4-cycle
inline PlaneGraph square() {
    return PlaneGraph({{1, 3}, {0, 2}, {1, 3}, {0, 2}}, Walk{0, 1, 2, 3});
}

// cube graph Q_3 embedded (outer square 0..3, inner square 4..7)
inline PlaneGraph cube() {
    return PlaneGraph(
        {
            {1, 4, 3},  // 0
            {2, 5, 0},  // 1
            {3, 6, 1},  // 2
            {0, 7, 2},  // 3
            {0, 5, 7},  // 4
            {1, 6, 4},  // 5
            {2, 7, 5},  // 6
            {3, 4, 6},  // 7
        },
        Walk{0, 1, 2, 3});
}

// two triangles sharing one vertex
inline PlaneGraph bowtie() {
    return PlaneGraph({{1, 2, 3, 4}, {0, 2}, {0, 1}, {0, 4}, {0, 3}});
}

// wheel: hub n joined to an n-cycle
inline PlaneGraph wheel(int rim) {
    std::vector<std::vector<int>> rot(rim + 1);
    for (int i = 0; i < rim; ++i) rot[i] = {(i + 1) % rim, rim, (i + rim - 1) % rim};
    for (int i = rim - 1; i >= 0; --i) rot[rim].push_back(i);
    Walk outer;
    for (int i = 0; i < rim; ++i) outer.push_back(i);
    return PlaneGraph(std::move(rot), outer);
}

// grows a random near triangulation by apex and ear insertions
inline PlaneGraph random_near_triangulation(int target_v, std::mt19937& rng) {
    PlaneGraph g = triangle_fixture();
    while (g.vertex_count() < target_v) {
        const FaceSet& fs = g.faces();
        bool ear = (rng() % 2) == 0;
        if (ear) {
            const Walk& outer = fs.outer_walk();
            int i = static_cast<int>(rng() % outer.size());
            int u = outer[i], v = outer[(i + 1) % outer.size()];
            auto rotation = g.rotations();
            int z = g.vertex_count();
            // new triangle u, v, z outside the edge u-v
            auto& ru = rotation[u];
            ru.insert(std::find(ru.begin(), ru.end(), v), z);
            auto& rv = rotation[v];
            rv.insert(std::next(std::find(rv.begin(), rv.end(), u)), z);
            rotation.push_back({u, v});
            Walk new_outer;
            for (int j = 0; j < static_cast<int>(outer.size()); ++j) {
                new_outer.push_back(outer[j]);
                if (outer[j] == u && outer[(j + 1) % outer.size()] == v) new_outer.push_back(z);
            }
            g = PlaneGraph(std::move(rotation), new_outer);
        } else {
            std::vector<int> interior;
            for (int i = 0; i < fs.size(); ++i)
                if (i != fs.outer) interior.push_back(i);
            int pick = interior[rng() % interior.size()];
            g = insert_apex(g, fs.walks[pick]);
        }
    }
    return g;
}

// random circuit graph with deficiency m in {0, 1}: a random near
// triangulation, optionally with one interior edge removed
inline CircuitGraph random_circuit_graph(int target_v, int want_m, std::mt19937& rng) {
    while (true) {
        PlaneGraph g = random_near_triangulation(target_v, rng);
        if (want_m == 0) return validate_circuit_graph(g, g.outer_walk());
        // delete one interior edge bordering two triangles
        const FaceSet& fs = g.faces();
        std::set<std::pair<int, int>> outer_edges;
        const Walk& ow = fs.outer_walk();
        for (size_t i = 0; i < ow.size(); ++i) {
            int u = ow[i], v = ow[(i + 1) % ow.size()];
            outer_edges.insert({std::min(u, v), std::max(u, v)});
        }
        std::vector<std::pair<int, int>> candidates;
        for (auto [u, v] : g.edges())
            if (!outer_edges.count({u, v})) candidates.push_back({u, v});
        if (candidates.empty()) continue;
        auto [u, v] = candidates[rng() % candidates.size()];
        auto rotation = g.rotations();
        auto& ru = rotation[u];
        ru.erase(std::find(ru.begin(), ru.end(), v));
        auto& rv = rotation[v];
        rv.erase(std::find(rv.begin(), rv.end(), u));
        try {
            PlaneGraph reduced(rotation, ow);
            auto checked = check_circuit_graph(reduced, ow);
            if (std::holds_alternative<CircuitGraph>(checked))
                return std::get<CircuitGraph>(std::move(checked));
        } catch (const Error&) {
        }
    }
}

}  // namespace pturan::testing
