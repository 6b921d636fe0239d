#include "pturan/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pturan {

namespace {

std::vector<std::vector<char>> adjacency_matrix(const std::vector<std::vector<int>>& rotation) {
    int n = static_cast<int>(rotation.size());
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v)
        for (int w : rotation[v]) adj[v][w] = 1;
    return adj;
}

}  // namespace

bool is_connected_adj(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

std::vector<Walk> trace_rotation_faces(const std::vector<std::vector<int>>& rotation) {
    int n = static_cast<int>(rotation.size());
    // position of u in the rotation at v
    std::vector<std::map<int, int>> pos(n);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i) pos[v][rotation[v][i]] = i;

    std::vector<Walk> walks;
    std::set<std::pair<int, int>> used;
    for (int u = 0; u < n; ++u) {
        for (int v : rotation[u]) {
            if (used.count({u, v})) continue;
            Walk walk;
            int a = u, b = v;
            while (!used.count({a, b})) {
                used.insert({a, b});
                walk.push_back(a);
                int i = pos[b].at(a);
                int next = rotation[b][(i + 1) % rotation[b].size()];
                a = b;
                b = next;
            }
            walks.push_back(std::move(walk));
        }
    }
    return walks;
}

bool same_cyclic(const Walk& walk, const Walk& face) {
    if (walk.size() != face.size()) return false;
    int k = static_cast<int>(walk.size());
    for (int dir = 0; dir < 2; ++dir) {
        Walk w = walk;
        if (dir == 1) std::reverse(w.begin(), w.end());
        for (int s = 0; s < k; ++s) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) ok = (w[(s + i) % k] == face[i]);
            if (ok) return true;
        }
    }
    return false;
}

PlaneGraph::PlaneGraph(std::vector<std::vector<int>> rotation, std::optional<Walk> outer)
    : rotation_(std::move(rotation)) {
    n_ = static_cast<int>(rotation_.size());
    if (n_ == 0) throw Error("empty graph");
    int deg_sum = 0;
    for (int v = 0; v < n_; ++v) {
        std::set<int> seen;
        for (int w : rotation_[v]) {
            if (w < 0 || w >= n_) throw Error("label out of range at vertex " + std::to_string(v));
            if (w == v) throw Error("self-loop at vertex " + std::to_string(v));
            if (!seen.insert(w).second)
                throw Error("repeated neighbor " + std::to_string(w) + " at vertex " + std::to_string(v));
        }
        deg_sum += static_cast<int>(rotation_[v].size());
    }
    auto adj = adjacency_matrix(rotation_);
    for (int v = 0; v < n_; ++v)
        for (int w : rotation_[v])
            if (!adj[w][v])
                throw Error("asymmetric adjacency: " + std::to_string(v) + " lists " + std::to_string(w));
    e_ = deg_sum / 2;
    if (n_ > 1 && !is_connected_adj(rotation_)) throw Error("graph is disconnected");

    trace_all_faces();
    int f = faces_.size();
    if (e_ == 0) f = 1;  // isolated vertex: one face, no directed edges
    if (n_ - e_ + f != 2)
        throw Error("rotation system is not planar: v-e+f = " +
                    std::to_string(n_ - e_ + f));

    if (outer) {
        int match = -1;
        for (int i = 0; i < faces_.size(); ++i)
            if (same_cyclic(*outer, faces_.walks[i])) {
                match = i;
                break;
            }
        if (match < 0) throw Error("designated outer face is not a face of the embedding");
        faces_.outer = match;
    }
}

void PlaneGraph::trace_all_faces() {
    faces_.walks = trace_rotation_faces(rotation_);
    faces_.outer = -1;
    // directed edge -> face index
    edge_face_.assign(n_, {});
    std::vector<std::map<int, int>> pos(n_);
    for (int v = 0; v < n_; ++v) {
        edge_face_[v].assign(rotation_[v].size(), -1);
        for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) pos[v][rotation_[v][i]] = i;
    }
    for (int fi = 0; fi < static_cast<int>(faces_.walks.size()); ++fi) {
        const Walk& w = faces_.walks[fi];
        int k = static_cast<int>(w.size());
        for (int i = 0; i < k; ++i) {
            int u = w[i], v = w[(i + 1) % k];
            edge_face_[u][pos[u].at(v)] = fi;
        }
    }
}

bool PlaneGraph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& r = rotation_[u];
    return std::find(r.begin(), r.end(), v) != r.end();
}

int PlaneGraph::face_left_of(int u, int v) const {
    const auto& r = rotation_[u];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == v) return edge_face_[u][i];
    throw Error("face_left_of: no edge " + std::to_string(u) + "-" + std::to_string(v));
}

int PlaneGraph::cw_successor(int v, int u) const {
    const auto& r = rotation_[v];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == u) return r[(i + 1) % r.size()];
    throw Error("cw_successor: no edge " + std::to_string(v) + "-" + std::to_string(u));
}

std::vector<std::pair<int, int>> PlaneGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < n_; ++v)
        for (int w : rotation_[v])
            if (v < w) out.emplace_back(v, w);
    std::sort(out.begin(), out.end());
    return out;
}

PlaneGraph PlaneGraph::with_outer(const Walk& walk) const { return PlaneGraph(rotation_, walk); }

std::string PlaneGraph::serialize() const {
    std::ostringstream os;
    os << "PLG 1\n";
    os << "n=" << n_ << "\n";
    for (int v = 0; v < n_; ++v) {
        os << v << ":";
        for (int w : rotation_[v]) os << " " << w;
        os << "\n";
    }
    if (faces_.outer >= 0) {
        os << "outer:";
        for (int v : faces_.outer_walk()) os << " " << v;
        os << "\n";
    }
    return os.str();
}

FaceSet trace_faces(const PlaneGraph& g) { return g.faces(); }

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line) {
    try {
        size_t idx = 0;
        int v = std::stoi(tok, &idx);
        if (idx != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer, got '" + tok + "'");
    }
}

}  // namespace

PlaneGraph parse_plg(const std::string& text) {
    std::vector<std::pair<int, std::string>> lines;  // (line number, content)
    {
        std::istringstream is(text);
        std::string line;
        int no = 0;
        while (std::getline(is, line)) {
            ++no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            if (split_ws(line).empty()) continue;
            lines.emplace_back(no, line);
        }
    }
    if (lines.empty()) throw ParseError(1, "empty input");

    auto header = split_ws(lines[0].second);
    if (header.size() != 2 || header[0] != "PLG" || header[1] != "1")
        throw ParseError(lines[0].first, "malformed header, expected 'PLG 1'");
    if (lines.size() < 2) throw ParseError(lines[0].first, "missing 'n=' line");

    const std::string& nline = lines[1].second;
    auto ntoks = split_ws(nline);
    if (ntoks.size() != 1 || ntoks[0].rfind("n=", 0) != 0)
        throw ParseError(lines[1].first, "expected 'n=<int>'");
    int n = parse_int(ntoks[0].substr(2), lines[1].first);
    if (n <= 0) throw ParseError(lines[1].first, "vertex count must be positive");
    if (static_cast<int>(lines.size()) < 2 + n)
        throw ParseError(lines.back().first, "missing rotation lines, expected " + std::to_string(n));

    std::vector<std::vector<int>> rotation(n);
    for (int v = 0; v < n; ++v) {
        int lineno = lines[2 + v].first;
        auto toks = split_ws(lines[2 + v].second);
        if (toks.empty() || toks[0] != std::to_string(v) + ":")
            throw ParseError(lineno, "expected rotation line '" + std::to_string(v) + ": ...'");
        std::set<int> seen;
        for (size_t i = 1; i < toks.size(); ++i) {
            int w = parse_int(toks[i], lineno);
            if (w < 0 || w >= n) throw ParseError(lineno, "label out of range: " + std::to_string(w));
            if (w == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(v));
            if (!seen.insert(w).second) throw ParseError(lineno, "repeated neighbor " + std::to_string(w));
            rotation[v].push_back(w);
        }
    }

    std::optional<Walk> outer;
    size_t next = 2 + n;
    if (next < lines.size()) {
        int lineno = lines[next].first;
        auto toks = split_ws(lines[next].second);
        if (toks.empty() || toks[0] != "outer:")
            throw ParseError(lineno, "unexpected line, expected 'outer: ...'");
        Walk w;
        for (size_t i = 1; i < toks.size(); ++i) {
            int v = parse_int(toks[i], lineno);
            if (v < 0 || v >= n) throw ParseError(lineno, "label out of range: " + std::to_string(v));
            w.push_back(v);
        }
        if (w.size() < 2) throw ParseError(lineno, "outer walk too short");
        outer = std::move(w);
        ++next;
        if (next < lines.size()) throw ParseError(lines[next].first, "trailing content after outer line");
    }

    // symmetry and connectivity diagnostics with line numbers
    for (int v = 0; v < n; ++v)
        for (int w : rotation[v]) {
            const auto& rw = rotation[w];
            if (std::find(rw.begin(), rw.end(), v) == rw.end())
                throw ParseError(lines[2 + v].first, "asymmetric adjacency: " + std::to_string(v) +
                                                         " lists " + std::to_string(w) +
                                                         " but not vice versa");
        }
    if (n > 1 && !is_connected_adj(rotation))
        throw ParseError(lines[1].first, "graph is disconnected");

    try {
        return PlaneGraph(std::move(rotation), std::move(outer));
    } catch (const Error& e) {
        throw ParseError(lines[0].first, e.what());
    }
}

std::vector<char> faces_outside_cycle(const PlaneGraph& g, const Cycle& c) {
    int k = static_cast<int>(c.size());
    if (k < 3) throw Error("faces_outside_cycle: not a cycle (too short)");
    std::set<int> cset(c.begin(), c.end());
    if (static_cast<int>(cset.size()) != k) throw Error("faces_outside_cycle: repeated vertex in cycle");
    std::set<std::pair<int, int>> cedges;
    for (int i = 0; i < k; ++i) {
        int u = c[i], v = c[(i + 1) % k];
        if (!g.has_edge(u, v)) throw Error("faces_outside_cycle: not a cycle of g");
        cedges.insert({std::min(u, v), std::max(u, v)});
    }
    if (!g.has_outer()) throw Error("faces_outside_cycle: outer face not designated");

    const FaceSet& fs = g.faces();
    std::vector<char> outside(fs.size(), 0);
    std::vector<int> stack{fs.outer};
    outside[fs.outer] = 1;
    while (!stack.empty()) {
        int fi = stack.back();
        stack.pop_back();
        const Walk& w = fs.walks[fi];
        int m = static_cast<int>(w.size());
        for (int i = 0; i < m; ++i) {
            int u = w[i], v = w[(i + 1) % m];
            if (cedges.count({std::min(u, v), std::max(u, v)})) continue;
            int other = g.face_left_of(v, u);
            if (!outside[other]) {
                outside[other] = 1;
                stack.push_back(other);
            }
        }
    }
    return outside;
}

Sub interior_of_cycle(const PlaneGraph& g, const Cycle& c) {
    int k = static_cast<int>(c.size());
    std::vector<char> outside = faces_outside_cycle(g, c);
    const FaceSet& fs = g.faces();
    int nf = fs.size();
    std::set<std::pair<int, int>> cedges;
    for (int i = 0; i < k; ++i) {
        int u = c[i], v = c[(i + 1) % k];
        cedges.insert({std::min(u, v), std::max(u, v)});
    }

    // kept edges: cycle edges plus every edge bordering an inside face
    std::set<std::pair<int, int>> kept(cedges);
    for (int fi = 0; fi < nf; ++fi) {
        if (outside[fi]) continue;
        const Walk& w = fs.walks[fi];
        int m = static_cast<int>(w.size());
        for (int i = 0; i < m; ++i) {
            int u = w[i], v = w[(i + 1) % m];
            kept.insert({std::min(u, v), std::max(u, v)});
        }
    }

    std::set<int> kept_vertices;
    for (auto& [u, v] : kept) {
        kept_vertices.insert(u);
        kept_vertices.insert(v);
    }
    std::vector<int> to_host(kept_vertices.begin(), kept_vertices.end());
    std::vector<int> to_sub(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(to_host.size()); ++i) to_sub[to_host[i]] = i;

    std::vector<std::vector<int>> rotation(to_host.size());
    for (int i = 0; i < static_cast<int>(to_host.size()); ++i) {
        int v = to_host[i];
        for (int w : g.rotation(v))
            if (kept.count({std::min(v, w), std::max(v, w)})) rotation[i].push_back(to_sub[w]);
    }

    // the sub's outer face is the side of c that faced g's outer region
    Walk c_sub(k);
    for (int i = 0; i < k; ++i) c_sub[i] = to_sub[c[i]];
    int u0 = c[0], v0 = c[1];
    bool left_outside = outside[g.face_left_of(u0, v0)];
    PlaneGraph sub(std::move(rotation));
    int su = left_outside ? to_sub[u0] : to_sub[v0];
    int sv = left_outside ? to_sub[v0] : to_sub[u0];
    // trace the sub face containing the directed edge (su, sv)
    int fi = sub.face_left_of(su, sv);
    Walk outer_walk = sub.faces().walks[fi];
    if (!same_cyclic(outer_walk, c_sub)) throw Error("interior_of_cycle: outer trace mismatch");
    return Sub{sub.with_outer(outer_walk), std::move(to_host)};
}

std::vector<std::vector<int>> cuts(const PlaneGraph& g, int size) {
    if (size != 1 && size != 2) throw Error("cuts: size must be 1 or 2");
    int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    auto disconnects = [&](const std::vector<int>& s) {
        std::vector<char> removed(n, 0);
        for (int v : s) removed[v] = 1;
        int start = -1, remaining = 0;
        for (int v = 0; v < n; ++v)
            if (!removed[v]) {
                ++remaining;
                if (start < 0) start = v;
            }
        if (remaining <= 1) return false;
        std::vector<char> seen(n, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.rotation(v))
                if (!removed[w] && !seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count != remaining;
    };
    if (size == 1) {
        for (int v = 0; v < n; ++v)
            if (disconnects({v})) out.push_back({v});
    } else {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (disconnects({u, v})) out.push_back({u, v});
    }
    return out;
}

std::vector<std::vector<std::pair<int, int>>> biconnected_components(
    const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<std::pair<int, int>>> comps;
    int counter = 0;

    struct Frame {
        int v;
        size_t i;
    };
    for (int root = 0; root < n; ++root) {
        if (num[root] >= 0 || adj[root].empty()) continue;
        std::vector<Frame> stack{{root, 0}};
        num[root] = low[root] = counter++;
        while (!stack.empty()) {
            int v = stack.back().v;
            if (stack.back().i < adj[v].size()) {
                int w = adj[v][stack.back().i++];
                if (num[w] < 0) {
                    edge_stack.push_back({v, w});
                    parent[w] = v;
                    num[w] = low[w] = counter++;
                    stack.push_back({w, 0});
                } else if (w != parent[v] && num[w] < num[v]) {
                    edge_stack.push_back({v, w});
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= num[p]) {
                        std::vector<std::pair<int, int>> comp;
                        while (!edge_stack.empty()) {
                            auto e = edge_stack.back();
                            comp.push_back(e);
                            edge_stack.pop_back();
                            if (e.first == p && e.second == v) break;
                        }
                        comps.push_back(std::move(comp));
                    }
                }
            }
        }
    }
    return comps;
}

Walk outer_walk_of_subgraph(const PlaneGraph& g, const std::vector<std::pair<int, int>>& edge_set) {
    std::set<std::pair<int, int>> sub_edges;
    for (auto& [u, v] : edge_set) sub_edges.insert({std::min(u, v), std::max(u, v)});
    if (!g.has_outer()) throw Error("outer_walk_of_subgraph: outer face not designated");

    const FaceSet& fs = g.faces();
    std::vector<char> reached(fs.size(), 0);
    std::vector<int> stack{fs.outer};
    reached[fs.outer] = 1;
    int from_u = -1, from_v = -1;
    while (!stack.empty() && from_u < 0) {
        int fi = stack.back();
        stack.pop_back();
        const Walk& w = fs.walks[fi];
        int m = static_cast<int>(w.size());
        for (int i = 0; i < m; ++i) {
            int u = w[i], v = w[(i + 1) % m];
            if (sub_edges.count({std::min(u, v), std::max(u, v)})) {
                from_u = u;
                from_v = v;
                break;
            }
            int other = g.face_left_of(v, u);
            if (!reached[other]) {
                reached[other] = 1;
                stack.push_back(other);
            }
        }
    }
    if (from_u < 0) throw Error("outer_walk_of_subgraph: subgraph not reachable");

    // trace the subgraph face from (from_u, from_v) using restricted rotations
    std::set<int> sub_vertices;
    for (auto& [u, v] : sub_edges) {
        sub_vertices.insert(u);
        sub_vertices.insert(v);
    }
    auto succ = [&](int v, int u) {
        // clockwise successor of u at v among subgraph edges
        const auto& r = g.rotation(v);
        int m = static_cast<int>(r.size());
        int i = 0;
        while (r[i] != u) ++i;
        for (int step = 1; step <= m; ++step) {
            int w = r[(i + step) % m];
            if (sub_edges.count({std::min(v, w), std::max(v, w)})) return w;
        }
        throw Error("outer_walk_of_subgraph: dangling edge");
    };
    Walk walk;
    int a = from_u, b = from_v;
    do {
        walk.push_back(a);
        int next = succ(b, a);
        a = b;
        b = next;
    } while (!(a == from_u && b == from_v));
    return walk;
}

}  // namespace pturan
