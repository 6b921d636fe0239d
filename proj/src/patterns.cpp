#include "pturan/patterns.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace pturan {

Pattern Pattern::exact_cycle(int k) {
    if (k < 3) throw Error("ExactCycle requires k >= 3");
    return Pattern{Kind::ExactCycle, k, 0};
}

Pattern Pattern::theta(int k) { return theta_member(k, 2); }

Pattern Pattern::theta_member(int k, int d) {
    if (k < 4) throw Error("theta patterns require k >= 4");
    if (d < 2 || 2 * d > k) throw Error("chord distance must satisfy 2 <= d <= k/2");
    return Pattern{d == 2 ? Kind::Theta : Kind::ThetaMember, k, d};
}

Pattern Pattern::circumference_less(int k) {
    if (k < 3) throw Error("CircumferenceLess requires k >= 3");
    return Pattern{Kind::CircumferenceLess, k, 0};
}

Pattern Pattern::parse(const std::string& text) {
    auto num = [&](size_t from, size_t to) {
        if (from >= to) throw Error("bad pattern '" + text + "'");
        for (size_t i = from; i < to; ++i)
            if (!isdigit(static_cast<unsigned char>(text[i]))) throw Error("bad pattern '" + text + "'");
        return std::stoi(text.substr(from, to - from));
    };
    if (text.rfind("theta", 0) == 0) {
        auto dot = text.find('.');
        if (dot == std::string::npos) return theta(num(5, text.size()));
        return theta_member(num(5, dot), num(dot + 1, text.size()));
    }
    if (text.rfind("circ", 0) == 0) return circumference_less(num(4, text.size()));
    if (text.rfind("c", 0) == 0) return exact_cycle(num(1, text.size()));
    throw Error("bad pattern '" + text + "'");
}

std::string Pattern::name() const {
    switch (kind) {
        case Kind::ExactCycle: return "c" + std::to_string(k);
        case Kind::Theta: return "theta" + std::to_string(k);
        case Kind::ThetaMember: return "theta" + std::to_string(k) + "." + std::to_string(d);
        case Kind::CircumferenceLess: return "circ" + std::to_string(k);
    }
    return "?";
}

bool cycle_witness_valid(const PlaneGraph& g, const Cycle& c, int k) {
    if (static_cast<int>(c.size()) != k) return false;
    std::set<int> distinct(c.begin(), c.end());
    if (static_cast<int>(distinct.size()) != k) return false;
    for (int i = 0; i < k; ++i)
        if (!g.has_edge(c[i], c[(i + 1) % k])) return false;
    return true;
}

bool theta_witness_valid(const PlaneGraph& g, const ThetaWitness& w, int k, int d) {
    if (!cycle_witness_valid(g, w.cycle, k)) return false;
    if (!g.has_edge(w.chord.first, w.chord.second)) return false;
    int pu = -1, pw = -1;
    for (int i = 0; i < k; ++i) {
        if (w.cycle[i] == w.chord.first) pu = i;
        if (w.cycle[i] == w.chord.second) pw = i;
    }
    if (pu < 0 || pw < 0) return false;
    int dist = std::abs(pu - pw);
    dist = std::min(dist, k - dist);
    return dist == d;
}

namespace {

struct PathSearch {
    const PlaneGraph& g;
    Budget* budget;
    std::vector<char> used;

    PathSearch(const PlaneGraph& g_, Budget* b) : g(g_), budget(b), used(g_.vertex_count(), 0) {}

    void tick() {
        if (budget) budget->tick();
    }

    // distance from `from` to `to` through unused vertices (from/to may be used)
    int restricted_dist(int from, int to) {
        if (from == to) return 0;
        std::vector<int> dist(g.vertex_count(), -1);
        std::queue<int> q;
        q.push(from);
        dist[from] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.rotation(v)) {
                if (w == to) return dist[v] + 1;
                if (!used[w] && dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
            }
        }
        return -1;
    }
};

// exact-length cycle through root = min vertex, extending in lex order
bool cycle_dfs(PathSearch& s, std::vector<int>& path, int k) {
    s.tick();
    int v = path.back();
    int root = path[0];
    int len = static_cast<int>(path.size());
    if (len == k) return s.g.has_edge(v, root);
    int need = k - len;
    int back = s.restricted_dist(v, root);
    if (back < 0 || back > need) return false;
    for (int w : s.g.rotation(v)) {
        if (w <= root || s.used[w]) continue;
        s.used[w] = 1;
        path.push_back(w);
        if (cycle_dfs(s, path, k)) return true;
        path.pop_back();
        s.used[w] = 0;
    }
    return false;
}

}  // namespace

std::optional<Cycle> has_cycle_of_length(const PlaneGraph& g, int k, Budget* budget) {
    if (k < 3) throw Error("has_cycle_of_length requires k >= 3");
    if (k > g.vertex_count()) return std::nullopt;
    PathSearch s(g, budget);
    for (int r = 0; r < g.vertex_count(); ++r) {
        std::vector<int> path{r};
        s.used.assign(g.vertex_count(), 0);
        s.used[r] = 1;
        if (cycle_dfs(s, path, k)) return path;
    }
    return std::nullopt;
}

namespace {

// exact-length path between fixed endpoints, internal vertices unused
bool path_dfs(PathSearch& s, std::vector<int>& path, int target, int len_left) {
    s.tick();
    int v = path.back();
    if (len_left == 0) return v == target;
    int d = s.restricted_dist(v, target);
    if (d < 0 || d > len_left) return false;
    for (int w : s.g.rotation(v)) {
        if (w == target && len_left == 1) {
            path.push_back(w);
            return true;
        }
        if (s.used[w] || w == target) continue;
        s.used[w] = 1;
        path.push_back(w);
        if (path_dfs(s, path, target, len_left - 1)) return true;
        path.pop_back();
        s.used[w] = 0;
    }
    return false;
}

// enumerate all k-cycles (root = min vertex), invoke cb; cb returns true to stop
template <typename Cb>
bool all_cycles_of_length(const PlaneGraph& g, int k, Budget* budget, Cb cb) {
    if (k > g.vertex_count()) return false;
    PathSearch s(g, budget);
    std::vector<int> path;
    struct Rec {
        PathSearch& s;
        int k;
        Cb& cb;
        bool run(std::vector<int>& path) {
            s.tick();
            int v = path.back();
            int root = path[0];
            if (static_cast<int>(path.size()) == k) {
                if (s.g.has_edge(v, root) && cb(path)) return true;
                return false;
            }
            int need = k - static_cast<int>(path.size());
            int back = s.restricted_dist(v, root);
            if (back < 0 || back > need) return false;
            for (int w : s.g.rotation(v)) {
                if (w <= root || s.used[w]) continue;
                s.used[w] = 1;
                path.push_back(w);
                if (run(path)) return true;
                path.pop_back();
                s.used[w] = 0;
            }
            return false;
        }
    } rec{s, k, cb};
    for (int r = 0; r < g.vertex_count(); ++r) {
        path.assign(1, r);
        s.used.assign(g.vertex_count(), 0);
        s.used[r] = 1;
        if (rec.run(path)) return true;
    }
    return false;
}

}  // namespace

std::optional<ThetaWitness> has_theta(const PlaneGraph& g, int k, int d, Budget* budget) {
    if (k < 4) throw Error("has_theta requires k >= 4");
    if (d < 2 || 2 * d > k) throw Error("has_theta requires 2 <= d <= k/2");
    if (k > g.vertex_count()) return std::nullopt;

    if (d == 2) {
        // triangle u,v,w plus a (k-2)-path from w back to u avoiding v
        for (auto [u, w] : g.edges()) {
            for (int v : g.rotation(u)) {
                if (v == w || !g.has_edge(v, w)) continue;
                PathSearch s(g, budget);
                s.used[u] = s.used[v] = s.used[w] = 1;
                std::vector<int> path{w};
                if (path_dfs(s, path, u, k - 2)) {
                    Cycle cycle{u, v};
                    cycle.insert(cycle.end(), path.begin(), path.end() - 1);
                    return ThetaWitness{cycle, {u, w}};
                }
            }
        }
        return std::nullopt;
    }

    std::optional<ThetaWitness> found;
    all_cycles_of_length(g, k, budget, [&](const std::vector<int>& cyc) {
        for (int i = 0; i < k; ++i) {
            int u = cyc[i], w = cyc[(i + d) % k];
            if (g.has_edge(u, w)) {
                found = ThetaWitness{cyc, {u, w}};
                return true;
            }
        }
        return false;
    });
    return found;
}

namespace {

// longest-cycle branch and bound; stops early once best >= target (if set)
struct CircumSearch {
    const PlaneGraph& g;
    Budget* budget;
    std::vector<char> used;
    int best = 0;
    Cycle best_cycle;
    int target;  // 0 = exact search

    CircumSearch(const PlaneGraph& g_, Budget* b, int target_)
        : g(g_), budget(b), used(g_.vertex_count(), 0), target(target_) {}

    int reachable_bound(int v) {
        // vertices reachable from v through unused ones, counting v
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<int> stack{v};
        seen[v] = 1;
        int count = 1;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int w : g.rotation(a))
                if (!used[w] && !seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count;
    }

    bool dfs(std::vector<int>& path) {
        if (budget) budget->tick();
        int v = path.back();
        int root = path[0];
        int len = static_cast<int>(path.size());
        if (len >= 3 && g.has_edge(v, root) && len > best) {
            best = len;
            best_cycle = path;
            if (target > 0 && best >= target) return true;
        }
        if (len + reachable_bound(v) - 1 <= best) return false;
        if (restricted_back(v, root) < 0) return false;
        for (int w : g.rotation(v)) {
            if (w <= root || used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            bool stop = dfs(path);
            path.pop_back();
            used[w] = 0;
            if (stop) return true;
        }
        return false;
    }

    int restricted_back(int from, int to) {
        if (g.has_edge(from, to)) return 1;
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<int> stack{from};
        seen[from] = 1;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int w : g.rotation(a)) {
                if (w == to && a != from) return 1;
                if (!used[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return -1;
    }
};

}  // namespace

std::pair<int, Cycle> circumference(const PlaneGraph& g, Budget* budget) {
    if (g.edge_count() < g.vertex_count()) throw Error("circumference: acyclic input");
    CircumSearch s(g, budget, 0);
    for (int r = 0; r < g.vertex_count(); ++r) {
        std::vector<int> path{r};
        s.used.assign(g.vertex_count(), 0);
        s.used[r] = 1;
        s.dfs(path);
    }
    if (s.best < 3) throw Error("circumference: acyclic input");
    return {s.best, s.best_cycle};
}

bool has_cycle_at_least(const PlaneGraph& g, int k, Budget* budget) {
    if (g.edge_count() < g.vertex_count()) return false;  // tree
    if (k <= 3) return true;                              // connected with e >= v has a cycle
    CircumSearch s(g, budget, k);
    for (int r = 0; r < g.vertex_count(); ++r) {
        std::vector<int> path{r};
        s.used.assign(g.vertex_count(), 0);
        s.used[r] = 1;
        if (s.dfs(path)) return true;
        if (s.best >= k) return true;
    }
    return s.best >= k;
}

int girth(const PlaneGraph& g) {
    int n = g.vertex_count();
    if (g.edge_count() < n) throw Error("girth: acyclic input");
    int best = n + 1;
    for (int r = 0; r < n; ++r) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> q;
        dist[r] = 0;
        q.push(r);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (2 * dist[v] + 1 >= best) break;
            for (int w : g.rotation(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (w != parent[v] && v != parent[w]) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if (best > n) throw Error("girth: acyclic input");
    return best;
}

MatchResult matches(const PlaneGraph& g, const Pattern& p, Budget* budget) {
    MatchResult r;
    switch (p.kind) {
        case Pattern::Kind::ExactCycle: {
            r.cycle = has_cycle_of_length(g, p.k, budget);
            r.matched = r.cycle.has_value();
            break;
        }
        case Pattern::Kind::Theta:
        case Pattern::Kind::ThetaMember: {
            r.theta = has_theta(g, p.k, p.d, budget);
            r.matched = r.theta.has_value();
            break;
        }
        case Pattern::Kind::CircumferenceLess: {
            if (g.edge_count() < g.vertex_count()) {
                r.matched = true;  // acyclic: circumference bound holds vacuously
            } else {
                auto [len, cyc] = circumference(g, budget);
                r.matched = len < p.k;
                if (!r.matched) r.cycle = cyc;
            }
            break;
        }
    }
    return r;
}

bool pattern_allows(const PlaneGraph& g, const Pattern& p, Budget* budget) {
    if (p.kind == Pattern::Kind::CircumferenceLess) return !has_cycle_at_least(g, p.k, budget);
    return !matches(g, p, budget).matched;
}

}  // namespace pturan
