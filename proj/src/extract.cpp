#include "pturan/extract.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

namespace pturan {

namespace {

std::vector<int> identity_map(int n) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = i;
    return m;
}

std::vector<int> compose_map(const std::vector<int>& outer_map, const std::vector<int>& inner_map) {
    std::vector<int> out(inner_map.size());
    for (size_t i = 0; i < inner_map.size(); ++i) out[i] = outer_map[inner_map[i]];
    return out;
}

// follow the cyclic walk from `from` to `to`, inclusive
std::vector<int> walk_arc(const Walk& walk, int from, int to) {
    int n = static_cast<int>(walk.size());
    int start = -1;
    for (int i = 0; i < n; ++i)
        if (walk[i] == from) start = i;
    if (start < 0) throw InternalInvariantBroken("walk_arc: vertex not on walk");
    std::vector<int> out{from};
    for (int i = 1; i <= n; ++i) {
        int v = walk[(start + i) % n];
        out.push_back(v);
        if (v == to) return out;
    }
    throw InternalInvariantBroken("walk_arc: target not on walk");
}

// join oriented segments sharing endpoints into a simple cycle; empty
// result signals a degenerate (non-simple) candidate
Cycle compose_cycle(const std::vector<std::vector<int>>& segments) {
    Cycle cyc;
    for (const auto& seg : segments) {
        if (seg.empty()) throw InternalInvariantBroken("compose_cycle: empty segment");
        if (cyc.empty()) {
            cyc = seg;
        } else {
            if (cyc.back() != seg.front()) throw InternalInvariantBroken("compose_cycle: junction mismatch");
            cyc.insert(cyc.end(), seg.begin() + 1, seg.end());
        }
    }
    if (cyc.size() < 2 || cyc.front() != cyc.back()) throw InternalInvariantBroken("compose_cycle: not closed");
    cyc.pop_back();
    std::set<int> distinct(cyc.begin(), cyc.end());
    if (distinct.size() != cyc.size()) return {};
    if (cyc.size() < 3) return {};
    return cyc;
}

// `count` fully vertex-disjoint paths from sources to sinks; sources and
// sinks are absorbing (never interior). Paths returned source -> sink.
std::optional<std::vector<std::vector<int>>> vertex_disjoint_paths(
    const std::vector<std::vector<int>>& adj, const std::vector<int>& sources,
    const std::vector<int>& sinks, const std::vector<char>& allowed_internal, int count) {
    int n = static_cast<int>(adj.size());
    int N = 2 * n + 2;
    int S = 2 * n, T = 2 * n + 1;
    std::vector<char> is_source(n, 0), is_sink(n, 0);
    for (int v : sources) is_source[v] = 1;
    for (int v : sinks) is_sink[v] = 1;

    std::map<std::pair<int, int>, int> cap;
    auto add = [&](int a, int b) { cap[{a, b}] += 1; };
    for (int v = 0; v < n; ++v) {
        bool participates = is_source[v] || is_sink[v] || allowed_internal[v];
        if (!participates) continue;
        add(2 * v, 2 * v + 1);
        if (is_source[v]) add(S, 2 * v);
        if (is_sink[v]) add(2 * v + 1, T);
    }
    for (int v = 0; v < n; ++v) {
        if (!(is_source[v] || is_sink[v] || allowed_internal[v])) continue;
        if (is_sink[v]) continue;  // absorbing
        for (int w : adj[v]) {
            if (!(is_source[w] || is_sink[w] || allowed_internal[w])) continue;
            if (is_source[w]) continue;  // absorbing
            add(2 * v + 1, 2 * w);
        }
    }

    std::map<std::pair<int, int>, int> flow;
    int sent = 0;
    while (sent < count) {
        // BFS augmenting path
        std::vector<int> pred(N, -1);
        std::queue<int> q;
        q.push(S);
        pred[S] = S;
        while (!q.empty() && pred[T] < 0) {
            int a = q.front();
            q.pop();
            for (auto& [key, c] : cap) {
                if (key.first != a) continue;
                int residual = c - flow[key];
                if (residual > 0 && pred[key.second] < 0) {
                    pred[key.second] = a;
                    q.push(key.second);
                }
            }
            // reverse edges
            for (auto& [key, f] : flow) {
                if (key.second != a || f <= 0) continue;
                if (pred[key.first] < 0) {
                    pred[key.first] = a;
                    q.push(key.first);
                }
            }
        }
        if (pred[T] < 0) return std::nullopt;
        int b = T;
        while (b != S) {
            int a = pred[b];
            if (cap.count({a, b}) && cap[{a, b}] - flow[{a, b}] > 0)
                flow[{a, b}] += 1;
            else
                flow[{b, a}] -= 1;
            b = a;
        }
        ++sent;
    }

    // extract paths by following saturated arcs
    std::vector<std::vector<int>> paths;
    std::map<std::pair<int, int>, int> remaining = flow;
    for (int v : sources) {
        if (remaining[{S, 2 * v}] <= 0) continue;
        remaining[{S, 2 * v}] -= 1;
        std::vector<int> path;
        int node = 2 * v;
        while (true) {
            path.push_back(node / 2);
            remaining[{node, node + 1}] -= 1;
            node += 1;  // to v_out
            if (remaining[{node, T}] > 0) {
                remaining[{node, T}] -= 1;
                break;
            }
            int next = -1;
            for (auto& [key, f] : remaining) {
                if (key.first == node && f > 0 && key.second != T) {
                    next = key.second;
                    break;
                }
            }
            if (next < 0) throw InternalInvariantBroken("flow path extraction failed");
            remaining[{node, next}] -= 1;
            node = next;
        }
        paths.push_back(std::move(path));
    }
    if (static_cast<int>(paths.size()) != count)
        throw InternalInvariantBroken("flow path count mismatch");
    return paths;
}

// interior faces of g strictly inside the cycle (face indices)
std::vector<int> faces_inside(const PlaneGraph& g, const Cycle& c) {
    std::vector<char> outside = faces_outside_cycle(g, c);
    std::vector<int> inside;
    for (int i = 0; i < static_cast<int>(outside.size()); ++i)
        if (!outside[i]) inside.push_back(i);
    return inside;
}

struct Piece {
    CircuitGraph cg;
    std::vector<int> to_host;  // into the current recursion level
    int v;
    int m;
};

Piece make_piece(Sub sub) {
    auto checked = check_circuit_graph(sub.graph, sub.graph.outer_walk());
    if (std::holds_alternative<CircuitViolation>(checked))
        throw InternalInvariantBroken("recursion piece fails circuit-graph validation: " +
                                      std::get<CircuitViolation>(checked).describe());
    CircuitGraph cg = std::get<CircuitGraph>(std::move(checked));
    int v = cg.vertex_count();
    int m = deficiency_m(cg);
    return Piece{std::move(cg), std::move(sub.to_host), v, m};
}

}  // namespace

class Extractor {
public:
    Extractor(int t, ExtractTrace& trace) : t_(t), trace_(trace) {}

    NtWitness run(const CircuitGraph& cg) { return rec(cg, identity_map(cg.vertex_count())); }

private:
    int t_;
    ExtractTrace& trace_;

    bool precondition_holds(int m, int v) const { return (3 * t_ - 7) * m < v - (t_ - 1); }

    NtWitness witness_of(const CircuitGraph& cg, const std::vector<int>& to_host) const {
        return NtWitness{cg.graph(), to_host};
    }

    void record(char tag, const std::vector<int>& face_local, const std::vector<int>& to_host,
                int m_before, int m_after, std::string note = "") {
        std::vector<int> face_host;
        for (int v : face_local) face_host.push_back(to_host[v]);
        trace_.steps.push_back({tag, face_host, m_before, m_after, std::move(note)});
    }

    // recurse into the best piece per the ratio rule, or return a finished one
    NtWitness descend(std::vector<Piece>& pieces, char tag, const std::vector<int>& face,
                      const std::vector<int>& to_host, int m_cur, std::string note = "") {
        std::vector<int> eligible;
        for (int i = 0; i < static_cast<int>(pieces.size()); ++i)
            if (pieces[i].v >= t_) eligible.push_back(i);
        if (eligible.empty())
            throw InternalInvariantBroken("no piece reaches t vertices");
        for (int i : eligible)
            if (pieces[i].m == 0) {
                record(tag, face, to_host, m_cur, 0, note);
                return witness_of(pieces[i].cg, compose_map(to_host, pieces[i].to_host));
            }
        int best = eligible[0];
        for (int i : eligible) {
            // maximize (v - (t-1)) / m by cross multiplication
            long long lhs = static_cast<long long>(pieces[i].v - (t_ - 1)) * pieces[best].m;
            long long rhs = static_cast<long long>(pieces[best].v - (t_ - 1)) * pieces[i].m;
            if (lhs > rhs) best = i;
        }
        Piece& p = pieces[best];
        if (p.m >= m_cur) throw InternalInvariantBroken("deficiency did not decrease");
        if (!precondition_holds(p.m, p.v))
            throw InternalInvariantBroken("chosen piece violates the precondition");
        record(tag, face, to_host, m_cur, p.m, note);
        return rec(p.cg, compose_map(to_host, p.to_host));
    }

    NtWitness rec(const CircuitGraph& cur, std::vector<int> to_host) {
        int m = deficiency_m(cur);
        if (m == 0) return witness_of(cur, to_host);
        const PlaneGraph& g = cur.graph();
        const Walk& C = cur.outer_cycle();
        const FaceSet& fs = g.faces();

        // pick the interior non-triangular face minimizing
        // (contact size, face size, lexicographic walk)
        std::set<int> on_c(C.begin(), C.end());
        int pick = -1;
        std::tuple<int, int, std::vector<int>> pick_key;
        for (int i = 0; i < fs.size(); ++i) {
            if (i == fs.outer || fs.walks[i].size() == 3) continue;
            int contact = 0;
            for (int v : fs.walks[i]) contact += on_c.count(v);
            std::vector<int> sorted(fs.walks[i]);
            std::sort(sorted.begin(), sorted.end());
            auto key = std::make_tuple(contact, static_cast<int>(fs.walks[i].size()), sorted);
            if (pick < 0 || key < pick_key) {
                pick = i;
                pick_key = key;
            }
        }
        if (pick < 0) throw InternalInvariantBroken("m > 0 but no non-triangular interior face");
        const Walk& F = fs.walks[pick];

        // structure of F on C: shared vertices and shared edges
        std::set<std::pair<int, int>> c_edges, f_edges;
        int lc = static_cast<int>(C.size()), lf = static_cast<int>(F.size());
        for (int i = 0; i < lc; ++i)
            c_edges.insert({std::min(C[i], C[(i + 1) % lc]), std::max(C[i], C[(i + 1) % lc])});
        for (int i = 0; i < lf; ++i)
            f_edges.insert({std::min(F[i], F[(i + 1) % lf]), std::max(F[i], F[(i + 1) % lf])});
        std::vector<int> shared;
        for (int v : F)
            if (on_c.count(v)) shared.push_back(v);
        std::set<std::pair<int, int>> shared_edges;
        for (auto& e : f_edges)
            if (c_edges.count(e)) shared_edges.insert(e);

        // components of the intersection (paths along both cycles)
        std::map<int, int> comp;
        {
            int cid = 0;
            for (int v : shared)
                if (!comp.count(v)) {
                    std::vector<int> stack{v};
                    comp[v] = cid;
                    while (!stack.empty()) {
                        int a = stack.back();
                        stack.pop_back();
                        for (auto& e : shared_edges) {
                            int b = -1;
                            if (e.first == a) b = e.second;
                            if (e.second == a) b = e.first;
                            if (b >= 0 && !comp.count(b)) {
                                comp[b] = cid;
                                stack.push_back(b);
                            }
                        }
                    }
                    ++cid;
                }
        }
        int ncomp = 0;
        for (auto& [v, c] : comp) ncomp = std::max(ncomp, c + 1);

        if (shared.empty()) return case_d(cur, std::move(to_host), pick, m);
        if (ncomp >= 2) return case_a(cur, std::move(to_host), pick, m, shared);
        if (!shared_edges.empty()) return case_b(cur, std::move(to_host), pick, m, shared_edges);
        return case_c(cur, std::move(to_host), pick, m, shared[0]);
    }

    // F meets C in several components: split along the contact vertices
    NtWitness case_a(const CircuitGraph& cur, std::vector<int> to_host, int face_id, int m,
                     const std::vector<int>& shared) {
        const PlaneGraph& g = cur.graph();
        const Walk& C = cur.outer_cycle();
        const Walk& F = g.faces().walks[face_id];
        Walk f_cw(F.rbegin(), F.rend());  // clockwise as drawn

        // contact vertices ordered clockwise along C
        std::set<int> contact_set(shared.begin(), shared.end());
        std::vector<int> contacts;
        for (int v : C)
            if (contact_set.count(v)) contacts.push_back(v);
        int s = static_cast<int>(contacts.size());

        std::vector<Piece> pieces;
        for (int i = 0; i < s; ++i) {
            int x = contacts[i], y = contacts[(i + 1) % s];
            auto arc_c = walk_arc(C, x, y);
            auto arc_f = walk_arc(f_cw, x, y);
            for (size_t j = 1; j + 1 < arc_f.size(); ++j)
                if (contact_set.count(arc_f[j]))
                    throw InternalInvariantBroken("contact order differs between C and F");
            if (arc_c.size() == 2 && arc_f.size() == 2) continue;  // single shared edge
            std::vector<int> back(arc_f.rbegin() + 1, arc_f.rend() - 1);
            Cycle cyc = arc_c;
            cyc.insert(cyc.end(), back.begin(), back.end());
            std::set<int> distinct(cyc.begin(), cyc.end());
            if (distinct.size() != cyc.size())
                throw InternalInvariantBroken("contact piece cycle not simple");
            pieces.push_back(make_piece(interior_of_cycle(g, cyc)));
        }
        return descend(pieces, 'A', F, to_host, m);
    }

    // F meets C in a path with an edge: delete the path interior
    NtWitness case_b(const CircuitGraph& cur, std::vector<int> to_host, int face_id, int m,
                     const std::set<std::pair<int, int>>& shared_edges) {
        const PlaneGraph& g = cur.graph();
        const Walk& C = cur.outer_cycle();
        const Walk& F = g.faces().walks[face_id];

        // order the shared path along C
        std::set<int> pverts;
        for (auto& e : shared_edges) {
            pverts.insert(e.first);
            pverts.insert(e.second);
        }
        // endpoints: degree 1 in the shared-edge path
        std::map<int, int> deg;
        for (auto& e : shared_edges) {
            deg[e.first]++;
            deg[e.second]++;
        }
        std::vector<int> ends;
        for (auto& [v, d] : deg)
            if (d == 1) ends.push_back(v);
        if (ends.size() != 2) throw InternalInvariantBroken("shared path has no two endpoints");

        // orient: the path runs along C from a to b in walk order
        int a = ends[0], b = ends[1];
        {
            auto arc = walk_arc(C, a, b);
            std::set<std::pair<int, int>> arc_edges;
            for (size_t i = 0; i + 1 < arc.size(); ++i)
                arc_edges.insert({std::min(arc[i], arc[i + 1]), std::max(arc[i], arc[i + 1])});
            if (arc_edges != shared_edges) std::swap(a, b);
        }

        // complementary arc of F between a and b (the side avoiding P)
        auto f1 = walk_arc(F, a, b);
        auto f2 = walk_arc(F, b, a);
        std::vector<int> comp_arc;  // oriented a -> b
        {
            auto edges_of = [](const std::vector<int>& p) {
                std::set<std::pair<int, int>> es;
                for (size_t i = 0; i + 1 < p.size(); ++i)
                    es.insert({std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1])});
                return es;
            };
            bool f1_is_shared = edges_of(f1) == shared_edges;
            if (f1_is_shared) {
                comp_arc = std::vector<int>(f2.rbegin(), f2.rend());
            } else {
                comp_arc = f1;
            }
            if (edges_of(comp_arc) == shared_edges)
                throw InternalInvariantBroken("could not find complementary F arc");
        }

        auto c_long = walk_arc(C, b, a);
        Cycle cyc = compose_cycle({c_long, comp_arc});
        if (cyc.empty()) throw InternalInvariantBroken("case B cycle not simple");
        std::vector<Piece> piece{make_piece(interior_of_cycle(g, cyc))};
        if (piece[0].v < t_) throw InternalInvariantBroken("case B piece below t vertices");
        return descend(piece, 'B', F, to_host, m);
    }

    // F meets C in exactly one vertex x
    NtWitness case_c(const CircuitGraph& cur, std::vector<int> to_host, int face_id, int m, int x) {
        const PlaneGraph& g = cur.graph();
        const Walk& C = cur.outer_cycle();
        const Walk& F = g.faces().walks[face_id];
        int lc = static_cast<int>(C.size());

        int y1 = -1, zr = -1;
        for (int i = 0; i < lc; ++i)
            if (C[i] == x) {
                y1 = C[(i + 1) % lc];
                zr = C[(i + lc - 1) % lc];
            }

        // rotation at x starts at the outer successor and ends at the
        // outer predecessor; F's two edges at x are adjacent in it
        std::vector<int> rot = g.rotation(x);
        {
            auto it = std::find(rot.begin(), rot.end(), y1);
            std::rotate(rot.begin(), it, rot.end());
        }
        if (rot.back() != zr) throw InternalInvariantBroken("rotation at x out of order");
        int fa = -1, fb = -1;
        {
            int lf = static_cast<int>(F.size());
            for (int i = 0; i < lf; ++i)
                if (F[i] == x) {
                    fa = F[(i + 1) % lf];
                    fb = F[(i + lf - 1) % lf];
                }
        }
        int split = -1;  // rot[split] = y_s, rot[split+1] = z_1
        for (int i = 0; i + 1 < static_cast<int>(rot.size()); ++i) {
            if ((rot[i] == fa && rot[i + 1] == fb) || (rot[i] == fb && rot[i + 1] == fa)) split = i;
        }
        if (split < 0) throw InternalInvariantBroken("F edges not adjacent at contact vertex");
        int ys = rot[split], z1 = rot[split + 1];

        std::string note;
        // try deleting either edge fan at x
        for (int side = 0; side < 2; ++side) {
            std::vector<int> fan(side == 0 ? std::vector<int>(rot.begin(), rot.begin() + split + 1)
                                           : std::vector<int>(rot.begin() + split + 1, rot.end()));
            auto rotation = g.rotations();
            for (int y : fan) {
                auto& ry = rotation[y];
                ry.erase(std::find(ry.begin(), ry.end(), x));
            }
            auto& rx = rotation[x];
            for (int y : fan) rx.erase(std::find(rx.begin(), rx.end(), y));

            // outer walk survives away from x
            int p = -1, q = -1;
            for (int i = 0; i < lc; ++i) {
                int u = C[i], v = C[(i + 1) % lc];
                if (u != x && v != x) {
                    p = u;
                    q = v;
                    break;
                }
            }
            try {
                PlaneGraph reduced(rotation);
                Walk new_outer = reduced.faces().walks[reduced.face_left_of(p, q)];
                std::set<int> distinct(new_outer.begin(), new_outer.end());
                if (distinct.size() != new_outer.size()) {
                    note += (side == 0 ? "G-Y" : "G-Z");
                    note += " outer walk not a cycle; ";
                    continue;
                }
                auto checked = check_circuit_graph(reduced, new_outer);
                if (std::holds_alternative<CircuitViolation>(checked)) {
                    note += (side == 0 ? "G-Y" : "G-Z");
                    note += " invalid: " + std::get<CircuitViolation>(checked).describe() + "; ";
                    continue;
                }
                CircuitGraph next = std::get<CircuitGraph>(std::move(checked));
                int nm = deficiency_m(next);
                if (nm >= m) throw InternalInvariantBroken("fan deletion did not reduce m");
                if (!precondition_holds(nm, next.vertex_count()))
                    throw InternalInvariantBroken("fan deletion violates precondition");
                record('C', F, to_host, m, nm, note + (side == 0 ? "recurse G-Y" : "recurse G-Z"));
                return rec(next, to_host);
            } catch (const Error& e) {
                if (dynamic_cast<const InternalInvariantBroken*>(&e)) throw;
                note += (side == 0 ? "G-Y" : "G-Z");
                note += std::string(" rejected: ") + e.what() + "; ";
            }
        }

        // both fans pinch: decompose across the block containing F - x
        auto adj = g.rotations();
        for (int y : adj[x]) {
            auto& ry = adj[y];
            ry.erase(std::find(ry.begin(), ry.end(), x));
        }
        adj[x].clear();

        auto comps = biconnected_components(adj);
        std::pair<int, int> f_edge{-1, -1};
        {
            int lf = static_cast<int>(F.size());
            for (int i = 0; i < lf; ++i) {
                int u = F[i], v = F[(i + 1) % lf];
                if (u != x && v != x) {
                    f_edge = {u, v};
                    break;
                }
            }
        }
        std::vector<std::pair<int, int>> b_edges;
        for (auto& comp : comps)
            for (auto& e : comp)
                if ((e.first == f_edge.first && e.second == f_edge.second) ||
                    (e.first == f_edge.second && e.second == f_edge.first)) {
                    b_edges = comp;
                    break;
                }
        if (b_edges.empty()) throw InternalInvariantBroken("block of F-x not found");
        std::set<int> b_vertices;
        for (auto& e : b_edges) {
            b_vertices.insert(e.first);
            b_vertices.insert(e.second);
        }

        // cut vertices of G - x lying in B, classified by which side of the
        // chain they separate
        int n = g.vertex_count();
        int v1 = -1, v2 = -1;
        for (int w : b_vertices) {
            if (w == y1 || w == zr)
                continue;  // never cut vertices of G - x in a circuit graph
            // components of (G - x) - w
            std::vector<int> comp_id(n, -1);
            int cid = 0;
            for (int s = 0; s < n; ++s) {
                if (s == x || s == w || comp_id[s] >= 0 || (adj[s].empty() && s != x)) {
                    if (s != x && s != w && comp_id[s] < 0 && adj[s].empty()) comp_id[s] = cid++;
                    continue;
                }
                std::vector<int> stack{s};
                comp_id[s] = cid;
                while (!stack.empty()) {
                    int a = stack.back();
                    stack.pop_back();
                    for (int b : adj[a])
                        if (b != w && comp_id[b] < 0) {
                            comp_id[b] = cid;
                            stack.push_back(b);
                        }
                }
                ++cid;
            }
            if (cid < 2) continue;  // not a cut vertex
            int b_repr = -1;
            for (int u : b_vertices)
                if (u != w) b_repr = u;
            if (comp_id[y1] != comp_id[b_repr]) {
                if (v1 >= 0) throw InternalInvariantBroken("multiple candidates for v1");
                v1 = w;
            } else if (comp_id[zr] != comp_id[b_repr]) {
                if (v2 >= 0) throw InternalInvariantBroken("multiple candidates for v2");
                v2 = w;
            }
        }
        if (v1 < 0 || v2 < 0 || v1 == v2)
            throw InternalInvariantBroken("block decomposition cut vertices not found");

        Walk cb = outer_walk_of_subgraph(g, b_edges);

        auto arc_b1 = walk_arc(cb, ys, v1);
        auto arc_c1 = walk_arc(C, x, v1);
        Cycle c1;
        {
            std::vector<int> back(arc_c1.rbegin() + 1, arc_c1.rend());
            std::vector<int> head{x};
            head.insert(head.end(), arc_b1.begin(), arc_b1.end());
            c1 = compose_cycle({head, back});
        }
        auto arc_b2 = walk_arc(cb, v2, z1);
        auto arc_c2 = walk_arc(C, v2, x);
        Cycle c2;
        {
            std::vector<int> head{x};
            head.insert(head.end(), arc_b2.rbegin(), arc_b2.rend());
            c2 = compose_cycle({head, arc_c2 /* v2..x */});
        }
        if (c1.empty() || c2.empty()) throw InternalInvariantBroken("decomposition cycle not simple");

        std::vector<Piece> pieces;
        pieces.push_back(make_piece(interior_of_cycle(g, c1)));
        pieces.push_back(make_piece(interior_of_cycle(g, c2)));
        pieces.push_back(make_piece(interior_of_cycle(g, cb)));

        int lf = static_cast<int>(F.size());
        if (pieces[0].m + pieces[1].m + pieces[2].m + (lf - 3) != m)
            throw InternalInvariantBroken("decomposition deficiency mismatch");
        if (pieces[0].v + pieces[1].v + pieces[2].v != g.vertex_count() + 3)
            throw InternalInvariantBroken("decomposition vertex coverage mismatch");
        return descend(pieces, 'C', F, to_host, m, note + "block decomposition");
    }

    // F disjoint from C: carve the sector between C and F
    NtWitness case_d(const CircuitGraph& cur, std::vector<int> to_host, int face_id, int m) {
        const PlaneGraph& g = cur.graph();
        const Walk& C = cur.outer_cycle();
        const Walk F = g.faces().walks[face_id];

        std::vector<char> allowed(g.vertex_count(), 1);
        for (int v : C) allowed[v] = 0;
        for (int v : F) allowed[v] = 0;
        std::vector<int> fverts(F.begin(), F.end()), cverts(C.begin(), C.end());
        std::sort(fverts.begin(), fverts.end());
        std::sort(cverts.begin(), cverts.end());
        auto paths = vertex_disjoint_paths(g.rotations(), fverts, cverts, allowed, 2);
        if (!paths) throw InternalInvariantBroken("no two disjoint C-F paths");

        // orient from C to F
        std::vector<int> p1((*paths)[0].rbegin(), (*paths)[0].rend());
        std::vector<int> p2((*paths)[1].rbegin(), (*paths)[1].rend());

        auto candidate = [&](const std::vector<int>& xa, const std::vector<int>& pa,
                             const std::vector<int>& pb, int f_face) -> std::pair<Cycle, int> {
            // xa: C-arc from pa's C-end to pb's C-end; f arcs tried both ways
            std::pair<Cycle, int> best{{}, -1};
            for (int dir = 0; dir < 2; ++dir) {
                std::vector<int> fa = dir == 0 ? walk_arc(F, pb.back(), pa.back())
                                               : std::vector<int>();
                if (dir == 1) {
                    auto tmp = walk_arc(F, pa.back(), pb.back());
                    fa.assign(tmp.rbegin(), tmp.rend());
                }
                std::vector<int> back(pa.rbegin(), pa.rend());
                Cycle cyc;
                try {
                    cyc = compose_cycle({xa, pb, fa, back});
                } catch (const InternalInvariantBroken&) {
                    continue;
                }
                if (cyc.empty()) continue;
                auto inside = faces_inside(g, cyc);
                if (std::find(inside.begin(), inside.end(), f_face) != inside.end()) continue;
                int measure = static_cast<int>(inside.size());
                if (best.second < 0 || measure < best.second ||
                    (measure == best.second && cyc < best.first))
                    best = {cyc, measure};
            }
            return best;
        };

        // two sides of C to choose from; keep the smaller sector
        std::pair<Cycle, int> best{{}, -1};
        std::vector<int> xarc, sp1 = p1, sp2 = p2;
        {
            auto xa12 = walk_arc(C, p1.front(), p2.front());
            auto cand12 = candidate(xa12, p1, p2, face_id);
            auto xa21 = walk_arc(C, p2.front(), p1.front());
            auto cand21 = candidate(xa21, p2, p1, face_id);
            if (cand12.second >= 0 && (cand21.second < 0 || cand12.second <= cand21.second)) {
                best = cand12;
                xarc = xa12;
                sp1 = p1;
                sp2 = p2;
            } else if (cand21.second >= 0) {
                best = cand21;
                xarc = xa21;
                sp1 = p2;
                sp2 = p1;
            }
        }
        if (best.second < 0) throw InternalInvariantBroken("no valid sector around F");

        Cycle cf = best.first;
        int measure = best.second;
        Walk fcur = F;
        int fcur_id = face_id;
        int shrinks = 0;

        while (true) {
            Sub sector = interior_of_cycle(g, cf);
            // smallest interior non-triangular face of the sector
            const FaceSet& sfs = sector.graph.faces();
            int fp = -1;
            std::pair<int, std::vector<int>> fp_key;
            for (int i = 0; i < sfs.size(); ++i) {
                if (i == sfs.outer || sfs.walks[i].size() == 3) continue;
                std::vector<int> sorted(sfs.walks[i]);
                std::sort(sorted.begin(), sorted.end());
                auto key = std::make_pair(static_cast<int>(sfs.walks[i].size()), sorted);
                if (fp < 0 || key < fp_key) {
                    fp = i;
                    fp_key = key;
                }
            }
            if (fp < 0) break;  // near triangulation reached
            ++shrinks;

            // reroute to the closer face: two disjoint paths from F' to the
            // C-arc within the sector
            const Walk& fp_local = sfs.walks[fp];
            Walk fp_host;
            for (int v : fp_local) fp_host.push_back(sector.to_host[v]);
            int fp_id = g.face_left_of(fp_host[0], fp_host[1]);

            std::vector<int> to_local(g.vertex_count(), -1);
            for (int i = 0; i < static_cast<int>(sector.to_host.size()); ++i)
                to_local[sector.to_host[i]] = i;
            std::vector<int> xarc_local;
            for (int v : xarc) xarc_local.push_back(to_local[v]);

            std::vector<char> allowed_local(sector.graph.vertex_count(), 1);
            for (int v : fp_local) allowed_local[v] = 0;
            for (int v : xarc_local) allowed_local[v] = 0;
            std::vector<int> srcs(fp_local.begin(), fp_local.end());
            std::vector<int> snks = xarc_local;
            std::sort(srcs.begin(), srcs.end());
            std::sort(snks.begin(), snks.end());
            auto qpaths =
                vertex_disjoint_paths(sector.graph.rotations(), srcs, snks, allowed_local, 2);
            if (!qpaths) throw InternalInvariantBroken("sector reroute paths missing");

            std::vector<int> q1, q2;  // oriented C-arc -> F'
            for (int v : (*qpaths)[0]) q1.push_back(sector.to_host[v]);
            for (int v : (*qpaths)[1]) q2.push_back(sector.to_host[v]);
            std::reverse(q1.begin(), q1.end());
            std::reverse(q2.begin(), q2.end());

            // order endpoints along the x-arc
            auto pos_of = [&](int v) {
                return std::find(xarc.begin(), xarc.end(), v) - xarc.begin();
            };
            if (pos_of(q1.front()) > pos_of(q2.front())) std::swap(q1, q2);
            std::vector<int> sub_arc(xarc.begin() + pos_of(q1.front()),
                                     xarc.begin() + pos_of(q2.front()) + 1);

            auto next = [&]() -> std::pair<Cycle, int> {
                std::pair<Cycle, int> bestc{{}, -1};
                for (int dir = 0; dir < 2; ++dir) {
                    std::vector<int> fa;
                    if (dir == 0) {
                        fa = walk_arc(fp_host, q2.back(), q1.back());
                    } else {
                        auto tmp = walk_arc(fp_host, q1.back(), q2.back());
                        fa.assign(tmp.rbegin(), tmp.rend());
                    }
                    std::vector<int> back(q1.rbegin(), q1.rend());
                    Cycle cyc;
                    try {
                        cyc = compose_cycle({sub_arc, q2, fa, back});
                    } catch (const InternalInvariantBroken&) {
                        continue;
                    }
                    if (cyc.empty()) continue;
                    auto inside = faces_inside(g, cyc);
                    if (std::find(inside.begin(), inside.end(), fp_id) != inside.end()) continue;
                    int ms = static_cast<int>(inside.size());
                    if (bestc.second < 0 || ms < bestc.second ||
                        (ms == bestc.second && cyc < bestc.first))
                        bestc = {cyc, ms};
                }
                return bestc;
            }();
            if (next.second < 0) throw InternalInvariantBroken("sector reroute cycle missing");
            if (next.second >= measure) throw InternalInvariantBroken("sector measure did not shrink");

            cf = next.first;
            measure = next.second;
            fcur = fp_host;
            fcur_id = fp_id;
            xarc = sub_arc;
            sp1 = q1;
            sp2 = q2;
        }

        Sub sector = interior_of_cycle(g, cf);
        if (!is_near_triangulation(sector.graph))
            throw InternalInvariantBroken("sector is not a near triangulation");
        std::string note = "shrinks=" + std::to_string(shrinks);
        if (sector.graph.vertex_count() >= t_) {
            record('D', F, to_host, m, 0, note + ", sector returned");
            auto checked = make_piece(std::move(sector));
            return witness_of(checked.cg, compose_map(to_host, checked.to_host));
        }

        // sector too small: delete its interior and recurse on the rest
        auto xc = walk_arc(C, xarc.back(), xarc.front());
        std::vector<int> fa_keep;  // arc of the final F kept in the remainder
        {
            // the complement of the arc used by cf between the path F-ends
            auto used_edges = [&](const Cycle& cyc) {
                std::set<std::pair<int, int>> es;
                for (size_t i = 0; i < cyc.size(); ++i) {
                    int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
                    es.insert({std::min(u, v), std::max(u, v)});
                }
                return es;
            };
            auto cf_edges = used_edges(cf);
            auto a1 = walk_arc(fcur, sp1.back(), sp2.back());
            bool a1_in_cf = true;
            for (size_t i = 0; i + 1 < a1.size(); ++i)
                if (!cf_edges.count({std::min(a1[i], a1[i + 1]), std::max(a1[i], a1[i + 1])}))
                    a1_in_cf = false;
            if (a1.size() >= 2 && a1_in_cf) {
                auto tmp = walk_arc(fcur, sp2.back(), sp1.back());
                fa_keep.assign(tmp.rbegin(), tmp.rend());  // oriented sp1-end -> sp2-end
            } else {
                fa_keep = a1;
            }
        }
        std::vector<int> back(sp2.rbegin(), sp2.rend());
        Cycle cprime = compose_cycle({xc, sp1, fa_keep, back});
        if (cprime.empty()) throw InternalInvariantBroken("remainder cycle not simple");

        std::vector<Piece> piece{make_piece(interior_of_cycle(g, cprime))};
        if (piece[0].v < t_) throw InternalInvariantBroken("remainder below t vertices");
        return descend(piece, 'D', F, to_host, m, note + ", sector deleted");
    }
};

std::pair<NtWitness, ExtractTrace> find_near_triangulation(const CircuitGraph& cg, int t) {
    if (t < 4) throw Error("find_near_triangulation requires t >= 4");
    int v = cg.vertex_count();
    int m = deficiency_m(cg);
    if (v < t || (3 * t - 7) * m >= v - (t - 1)) throw PreconditionViolated(m, v, t);
    ExtractTrace trace;
    Extractor ex(t, trace);
    NtWitness w = ex.run(cg);
    for (size_t i = 1; i < trace.steps.size(); ++i)
        if (trace.steps[i].m_before >= trace.steps[i - 1].m_before)
            throw InternalInvariantBroken("trace deficiency not strictly decreasing");
    return {std::move(w), std::move(trace)};
}

bool nt_witness_valid(const PlaneGraph& host, const NtWitness& w, int t) {
    const PlaneGraph& sub = w.subgraph;
    if (sub.vertex_count() < t) return false;
    if (static_cast<int>(w.embedding_map.size()) != sub.vertex_count()) return false;
    std::set<int> image(w.embedding_map.begin(), w.embedding_map.end());
    if (static_cast<int>(image.size()) != sub.vertex_count()) return false;
    for (auto [u, v] : sub.edges())
        if (!host.has_edge(w.embedding_map[u], w.embedding_map[v])) return false;
    return is_near_triangulation(sub);
}

std::optional<NtWitness> oracle_near_triangulation(const PlaneGraph& g, int t, Budget* budget) {
    if (t < 4) throw Error("oracle_near_triangulation requires t >= 4");
    if (!g.has_outer()) throw Error("oracle_near_triangulation: outer face not designated");

    const FaceSet& fs = g.faces();
    std::vector<int> tri;  // interior triangular faces
    std::vector<int> tri_index(fs.size(), -1);
    for (int i = 0; i < fs.size(); ++i) {
        if (i == fs.outer || fs.walks[i].size() != 3) continue;
        tri_index[i] = static_cast<int>(tri.size());
        tri.push_back(i);
    }
    int nt = static_cast<int>(tri.size());
    if (nt == 0) return std::nullopt;

    // dual adjacency among interior triangles
    std::vector<std::vector<int>> dual(nt);
    for (int i = 0; i < nt; ++i) {
        const Walk& w = fs.walks[tri[i]];
        for (int j = 0; j < 3; ++j) {
            int other = g.face_left_of(w[(j + 1) % 3], w[j]);
            if (tri_index[other] >= 0 && tri_index[other] != i) dual[i].push_back(tri_index[other]);
        }
    }

    int max_faces = std::max(1, 2 * t - 5);

    // a union of faces is a usable disc when its boundary edges form one
    // simple cycle and Euler gives v - e + f = 1
    auto check = [&](const std::vector<int>& faces_sel) -> std::optional<Cycle> {
        std::map<std::pair<int, int>, int> edge_count;
        std::set<int> verts;
        for (int ti : faces_sel) {
            const Walk& w = fs.walks[tri[ti]];
            for (int j = 0; j < 3; ++j) {
                int u = w[j], v = w[(j + 1) % 3];
                edge_count[{std::min(u, v), std::max(u, v)}]++;
                verts.insert(u);
            }
        }
        if (static_cast<int>(verts.size()) < t) return std::nullopt;
        int e_total = static_cast<int>(edge_count.size());
        if (static_cast<int>(verts.size()) - e_total + static_cast<int>(faces_sel.size()) != 1)
            return std::nullopt;
        std::map<int, std::vector<int>> boundary;
        int boundary_edges = 0;
        for (auto& [e, cnt] : edge_count) {
            if (cnt != 1) continue;
            ++boundary_edges;
            boundary[e.first].push_back(e.second);
            boundary[e.second].push_back(e.first);
        }
        for (auto& [v, nb] : boundary)
            if (nb.size() != 2) return std::nullopt;
        // single closed boundary walk
        Cycle cyc;
        int start = boundary.begin()->first;
        int prev = -1, curr = start;
        do {
            cyc.push_back(curr);
            auto& nb = boundary[curr];
            int nxt = (nb[0] == prev) ? nb[1] : nb[0];
            prev = curr;
            curr = nxt;
        } while (curr != start && static_cast<int>(cyc.size()) <= boundary_edges);
        if (static_cast<int>(cyc.size()) != boundary_edges) return std::nullopt;
        return cyc;
    };

    // enumerate connected face sets up to max_faces (canonical: sets
    // containing their minimum face, grown through the dual)
    std::optional<NtWitness> found;
    std::vector<int> sel;
    std::vector<char> in_sel(nt, 0), forbidden(nt, 0);

    std::function<bool(std::vector<int>&)> grow = [&](std::vector<int>& frontier) -> bool {
        if (budget) budget->tick();
        if (auto cyc = check(sel)) {
            Sub sub = interior_of_cycle(g, *cyc);
            found = NtWitness{sub.graph, sub.to_host};
            return true;
        }
        if (static_cast<int>(sel.size()) == max_faces) return false;
        std::vector<int> local;
        for (size_t idx = 0; idx < frontier.size(); ++idx) {
            int c = frontier[idx];
            if (forbidden[c] || in_sel[c]) continue;
            in_sel[c] = 1;
            sel.push_back(c);
            std::vector<int> next(frontier.begin() + idx + 1, frontier.end());
            for (int d : dual[c])
                if (!in_sel[d] && !forbidden[d]) next.push_back(d);
            if (grow(next)) return true;
            sel.pop_back();
            in_sel[c] = 0;
            forbidden[c] = 1;
            local.push_back(c);
        }
        for (int c : local) forbidden[c] = 0;
        return false;
    };

    for (int s = 0; s < nt && !found; ++s) {
        sel = {s};
        in_sel.assign(nt, 0);
        in_sel[s] = 1;
        std::vector<int> frontier;
        for (int d : dual[s])
            if (d > s) frontier.push_back(d);
        std::vector<char> forb(nt, 0);
        for (int d = 0; d <= s; ++d) forb[d] = 1;
        forbidden = forb;
        forbidden[s] = 0;
        grow(frontier);
    }
    return found;
}

}  // namespace pturan
