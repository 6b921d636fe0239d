#include "pturan/circuit_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pturan {

std::string CircuitViolation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::NotTwoConnected:
            os << "not 2-connected";
            if (!cut.empty()) os << " (cut vertex " << cut[0] << ")";
            break;
        case Kind::NotFacial:
            os << "designated cycle is not a facial cycle";
            break;
        case Kind::BadTwoCut:
            os << "2-cut {" << cut[0] << "," << cut[1] << "} has a component avoiding the outer cycle {";
            for (size_t i = 0; i < component.size(); ++i) os << (i ? "," : "") << component[i];
            os << "}";
            break;
    }
    return os.str();
}

namespace {

std::vector<std::vector<int>> components_without(const PlaneGraph& g, const std::vector<int>& removed_set) {
    int n = g.vertex_count();
    std::vector<char> removed(n, 0);
    for (int v : removed_set) removed[v] = 1;
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (removed[s] || seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.rotation(v))
                if (!removed[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace

std::variant<CircuitGraph, CircuitViolation> check_circuit_graph(const PlaneGraph& g, const Cycle& c) {
    int n = g.vertex_count();
    if (n < 3)
        return CircuitViolation{CircuitViolation::Kind::NotTwoConnected, {}, {}};
    for (int v = 0; v < n; ++v)
        if (components_without(g, {v}).size() > 1)
            return CircuitViolation{CircuitViolation::Kind::NotTwoConnected, {v}, {}};

    int match = -1;
    const FaceSet& fs = g.faces();
    for (int i = 0; i < fs.size(); ++i)
        if (same_cyclic(c, fs.walks[i])) {
            match = i;
            break;
        }
    if (match < 0) return CircuitViolation{CircuitViolation::Kind::NotFacial, {}, {}};
    const Walk& walk = fs.walks[match];

    std::vector<char> on_c(n, 0);
    for (int v : walk) on_c[v] = 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            auto comps = components_without(g, {u, v});
            if (comps.size() < 2) continue;
            for (auto& comp : comps) {
                bool touches = false;
                for (int w : comp)
                    if (on_c[w]) {
                        touches = true;
                        break;
                    }
                if (!touches)
                    return CircuitViolation{CircuitViolation::Kind::BadTwoCut, {u, v}, comp};
            }
        }

    return CircuitGraph(g.with_outer(walk), walk);
}

CircuitGraph validate_circuit_graph(const PlaneGraph& g, const Cycle& c) {
    auto r = check_circuit_graph(g, c);
    if (std::holds_alternative<CircuitViolation>(r))
        throw CircuitGraphError(std::get<CircuitViolation>(r));
    return std::get<CircuitGraph>(std::move(r));
}

int interior_face_deficiency(const PlaneGraph& g) {
    if (!g.has_outer()) throw Error("interior_face_deficiency: outer face not designated");
    const FaceSet& fs = g.faces();
    int total = 0;
    for (int i = 0; i < fs.size(); ++i) {
        if (i == fs.outer) continue;
        total += static_cast<int>(fs.walks[i].size()) - 3;
    }
    return total;
}

int deficiency_m(const CircuitGraph& cg) {
    const PlaneGraph& g = cg.graph();
    int v = g.vertex_count();
    int e = g.edge_count();
    int k = static_cast<int>(cg.outer_cycle().size());
    int m = 3 * v - 6 - e - (k - 3);
    int cross = interior_face_deficiency(g);
    if (m != cross)
        throw Error("deficiency mismatch: formula " + std::to_string(m) + " vs face sum " +
                    std::to_string(cross));
    return m;
}

bool is_near_triangulation(const PlaneGraph& g) {
    if (!g.has_outer()) return false;
    const FaceSet& fs = g.faces();
    const Walk& outer = fs.outer_walk();
    std::set<int> distinct(outer.begin(), outer.end());
    if (distinct.size() != outer.size()) return false;  // outer walk must be a simple cycle
    for (int i = 0; i < fs.size(); ++i) {
        if (i == fs.outer) continue;
        if (fs.walks[i].size() != 3) return false;
    }
    return true;
}

}  // namespace pturan
