#include "pturan/enumerate.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace pturan {

namespace {

// ---- DMP embedding of one 2-connected block (local labels) ----

struct BlockEmbedder {
    int n;
    std::vector<std::vector<int>> adj;       // block adjacency
    std::vector<std::vector<char>> target;   // edges to embed
    std::vector<std::vector<int>> rot;       // rotations of embedded subgraph
    std::vector<std::vector<char>> in_h;     // embedded edges
    std::vector<char> on_h;                  // embedded vertices
    int edges_left = 0;

    explicit BlockEmbedder(const std::vector<std::vector<int>>& block_adj)
        : n(static_cast<int>(block_adj.size())), adj(block_adj) {
        target.assign(n, std::vector<char>(n, 0));
        in_h.assign(n, std::vector<char>(n, 0));
        rot.assign(n, {});
        on_h.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (int w : adj[v])
                if (v < w) {
                    target[v][w] = target[w][v] = 1;
                    ++edges_left;
                }
    }

    std::vector<int> find_cycle() {
        std::vector<int> parent(n, -1), depth(n, -1);
        std::vector<int> stack{0};
        depth[0] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (depth[w] < 0) {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    stack.push_back(w);
                } else if (w != parent[v] && depth[w] < depth[v]) {
                    std::vector<int> cyc{w};
                    for (int a = v; a != w; a = parent[a]) cyc.push_back(a);
                    std::reverse(cyc.begin() + 1, cyc.end());
                    return cyc;
                }
            }
        }
        throw Error("block has no cycle");
    }

    void embed_edge(int u, int v) {
        in_h[u][v] = in_h[v][u] = 1;
        --edges_left;
    }

    void embed_path(const std::vector<int>& path, const Walk& face) {
        // insert the path between its endpoints inside the given face
        int a = path.front(), b = path.back();
        auto gap_insert = [&](int x, int nbr) {
            // insert nbr into x's rotation right after x's face predecessor
            int k = static_cast<int>(face.size());
            int pred = -1;
            for (int i = 0; i < k; ++i)
                if (face[(i + 1) % k] == x) pred = face[i];
            auto& r = rot[x];
            auto it = std::find(r.begin(), r.end(), pred);
            r.insert(it + 1, nbr);
        };
        gap_insert(a, path[1]);
        gap_insert(b, path[path.size() - 2]);
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            rot[path[i]] = {path[i - 1], path[i + 1]};
            on_h[path[i]] = 1;
        }
        for (size_t i = 0; i + 1 < path.size(); ++i) embed_edge(path[i], path[i + 1]);
    }

    std::optional<std::vector<std::vector<int>>> run() {
        if (n < 3) throw Error("block embedder needs >= 3 vertices");
        std::vector<int> cyc = find_cycle();
        int k = static_cast<int>(cyc.size());
        for (int i = 0; i < k; ++i) {
            int u = cyc[i], v = cyc[(i + 1) % k];
            rot[u].push_back(v);
            rot[v].push_back(u);
            on_h[u] = 1;
            embed_edge(u, v);
        }

        while (edges_left > 0) {
            std::vector<Walk> faces = trace_rotation_faces(rot);

            // fragments: chords between embedded vertices, and bridges
            // through unembedded components
            struct Fragment {
                std::vector<int> attachments;
                std::vector<int> path;  // attachment .. attachment
            };
            std::vector<Fragment> fragments;

            for (int u = 0; u < n; ++u)
                for (int v : adj[u]) {
                    if (u >= v || !on_h[u] || !on_h[v] || in_h[u][v]) continue;
                    fragments.push_back({{u, v}, {u, v}});
                }

            std::vector<char> seen(n, 0);
            for (int s = 0; s < n; ++s) {
                if (on_h[s] || seen[s] || adj[s].empty()) continue;
                // component of unembedded vertices
                std::vector<int> comp, stack{s};
                seen[s] = 1;
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    comp.push_back(v);
                    for (int w : adj[v])
                        if (!on_h[w] && !seen[w]) {
                            seen[w] = 1;
                            stack.push_back(w);
                        }
                }
                std::set<int> attach;
                for (int v : comp)
                    for (int w : adj[v])
                        if (on_h[w]) attach.insert(w);
                if (attach.size() < 2) return std::nullopt;  // blocks only

                // path between two attachments through the component
                int a = *attach.begin();
                std::vector<int> parent(n, -1);
                std::queue<int> q;
                std::vector<char> vis(n, 0);
                for (int w : adj[a])
                    if (!on_h[w] && !vis[w] &&
                        std::find(comp.begin(), comp.end(), w) != comp.end()) {
                        vis[w] = 1;
                        parent[w] = a;
                        q.push(w);
                    }
                int hit = -1;
                while (!q.empty() && hit < 0) {
                    int v = q.front();
                    q.pop();
                    for (int w : adj[v]) {
                        if (on_h[w] && w != a) {
                            parent[w] = v;
                            hit = w;
                            break;
                        }
                        if (!on_h[w] && !vis[w]) {
                            vis[w] = 1;
                            parent[w] = v;
                            q.push(w);
                        }
                    }
                }
                if (hit < 0) return std::nullopt;
                std::vector<int> path{hit};
                for (int v = parent[hit]; v >= 0; v = parent[v]) {
                    path.push_back(v);
                    if (v == a) break;
                }
                std::reverse(path.begin(), path.end());
                fragments.push_back({std::vector<int>(attach.begin(), attach.end()), path});
            }

            if (fragments.empty()) throw Error("embedder: no fragments but edges remain");

            // admissible faces per fragment
            int best_frag = -1, best_count = 0, best_face = -1;
            for (int fi = 0; fi < static_cast<int>(fragments.size()); ++fi) {
                int count = 0, first = -1;
                for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
                    std::set<int> fv(faces[f].begin(), faces[f].end());
                    bool ok = true;
                    for (int aatt : fragments[fi].attachments)
                        if (!fv.count(aatt)) {
                            ok = false;
                            break;
                        }
                    if (ok) {
                        ++count;
                        if (first < 0) first = f;
                    }
                }
                if (count == 0) return std::nullopt;  // non-planar
                if (best_frag < 0 || count < best_count) {
                    best_frag = fi;
                    best_count = count;
                    best_face = first;
                }
            }
            embed_path(fragments[best_frag].path, faces[best_face]);
        }
        return rot;
    }
};

}  // namespace

std::optional<PlaneGraph> embed_planar(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 0) return std::nullopt;
    if (!is_connected_adj(adj)) return std::nullopt;
    int e = 0;
    for (auto& lst : adj) e += static_cast<int>(lst.size());
    e /= 2;
    if (n >= 3 && e > 3 * n - 6) return std::nullopt;

    // embed each block, then merge rotations at cut vertices
    std::vector<std::vector<int>> rotation(n);
    for (auto& block : biconnected_components(adj)) {
        std::set<int> verts;
        for (auto& [u, v] : block) {
            verts.insert(u);
            verts.insert(v);
        }
        if (block.size() == 1) {
            rotation[block[0].first].push_back(block[0].second);
            rotation[block[0].second].push_back(block[0].first);
            continue;
        }
        std::vector<int> to_global(verts.begin(), verts.end());
        std::map<int, int> to_local;
        for (int i = 0; i < static_cast<int>(to_global.size()); ++i) to_local[to_global[i]] = i;
        std::vector<std::vector<int>> badj(verts.size());
        for (auto& [u, v] : block) {
            badj[to_local[u]].push_back(to_local[v]);
            badj[to_local[v]].push_back(to_local[u]);
        }
        for (auto& lst : badj) std::sort(lst.begin(), lst.end());
        BlockEmbedder be(badj);
        auto rot = be.run();
        if (!rot) return std::nullopt;
        for (int i = 0; i < static_cast<int>(rot->size()); ++i)
            for (int w : (*rot)[i]) rotation[to_global[i]].push_back(to_global[w]);
    }
    return PlaneGraph(std::move(rotation));
}

namespace {

// iterated neighbor-cell refinement of the degree partition
std::vector<std::vector<int>> refine_partition(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> cell_of(n, 0);
    // initial: by degree
    {
        std::vector<int> degs;
        for (auto& l : adj) degs.push_back(static_cast<int>(l.size()));
        std::vector<int> sorted_degs = degs;
        std::sort(sorted_degs.begin(), sorted_degs.end());
        sorted_degs.erase(std::unique(sorted_degs.begin(), sorted_degs.end()), sorted_degs.end());
        for (int v = 0; v < n; ++v)
            cell_of[v] = static_cast<int>(
                std::lower_bound(sorted_degs.begin(), sorted_degs.end(), degs[v]) -
                sorted_degs.begin());
    }
    while (true) {
        int ncells = *std::max_element(cell_of.begin(), cell_of.end()) + 1;
        // signature: old cell plus sorted multiset of neighbor cells
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s(ncells + 1, 0);
            s[0] = cell_of[v];
            for (int w : adj[v]) s[cell_of[w] + 1]++;
            sig[v] = {s, v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted_sig = sig;
        std::sort(sorted_sig.begin(), sorted_sig.end());
        std::vector<int> next(n);
        int cid = -1;
        std::vector<int> last;
        for (auto& [s, v] : sorted_sig) {
            if (cid < 0 || s != last) {
                ++cid;
                last = s;
            }
            next[v] = cid;
        }
        if (next == cell_of) break;
        cell_of = next;
    }
    int ncells = *std::max_element(cell_of.begin(), cell_of.end()) + 1;
    std::vector<std::vector<int>> cells(ncells);
    for (int v = 0; v < n; ++v) cells[cell_of[v]].push_back(v);
    return cells;
}

struct CanonSearch {
    int n;
    const std::vector<std::vector<char>>& mat;
    const std::vector<int>& cell_of;
    std::vector<int> perm;          // perm[pos] = original vertex
    std::vector<char> placed;
    std::vector<std::uint32_t> best_cols;
    std::vector<std::uint32_t> cols;
    std::vector<int> best_perm;
    bool have_best = false;

    void search(int pos, bool tight) {
        if (pos == n) {
            if (!have_best || cols < best_cols) {
                best_cols = cols;
                best_perm = perm;
            }
            have_best = true;
            return;
        }
        // candidates: unplaced vertices of the earliest eligible cell
        int want = -1;
        for (int v = 0; v < n; ++v)
            if (!placed[v] && (want < 0 || cell_of[v] < want)) want = cell_of[v];
        for (int v = 0; v < n; ++v) {
            if (placed[v] || cell_of[v] != want) continue;
            bool next_tight = tight;
            if (pos > 0) {
                std::uint32_t col = 0;
                for (int i = 0; i < pos; ++i) col = (col << 1) | (mat[perm[i]][v] ? 1u : 0u);
                if (have_best && tight) {
                    if (col > best_cols[pos - 1]) continue;
                    if (col < best_cols[pos - 1]) next_tight = false;
                }
                cols[pos - 1] = col;
            }
            placed[v] = 1;
            perm[pos] = v;
            search(pos + 1, next_tight);
            placed[v] = 0;
        }
    }
};

std::pair<std::vector<std::uint32_t>, std::vector<int>> canon_impl(
    const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 0) throw Error("canonical_code: empty graph");
    std::vector<std::vector<char>> mat(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v)
        for (int w : adj[v]) mat[v][w] = 1;
    auto cells = refine_partition(adj);
    std::vector<int> cell_of(n);
    for (int c = 0; c < static_cast<int>(cells.size()); ++c)
        for (int v : cells[c]) cell_of[v] = c;

    CanonSearch cs{n, mat, cell_of, std::vector<int>(n), std::vector<char>(n, 0),
                   {},   {},  std::vector<int>(n)};
    cs.cols.assign(std::max(0, n - 1), 0);
    if (n == 1) return {{}, {0}};
    // seed: identity-ish first placement ordered by cells
    cs.search(0, true);
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[cs.best_perm[i]] = i;
    return {cs.best_cols, inv};  // inv[orig] = canonical position
}

}  // namespace

std::vector<std::uint32_t> canonical_code(const std::vector<std::vector<int>>& adj) {
    return canon_impl(adj).first;
}

std::vector<std::vector<int>> canonical_form(const std::vector<std::vector<int>>& adj) {
    auto [code, inv] = canon_impl(adj);
    int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> out(n);
    for (int v = 0; v < n; ++v)
        for (int w : adj[v]) out[inv[v]].push_back(inv[w]);
    for (auto& lst : out) std::sort(lst.begin(), lst.end());
    return out;
}

const std::vector<PlaneGraph>& PlanarEnumerator::enumerate(int n, Budget* budget) {
    if (n < 1) throw Error("enumerate_planar requires n >= 1");
    if (static_cast<int>(embedded_.size()) > n && !embedded_[n].empty()) return embedded_[n];
    if (static_cast<int>(levels_.size()) <= n) {
        levels_.resize(n + 1);
        embedded_.resize(n + 1);
    }
    if (levels_[1].empty()) levels_[1] = {{{}}};

    for (int k = 2; k <= n; ++k) {
        if (!levels_[k].empty()) continue;
        std::set<std::vector<std::uint32_t>> seen;
        std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::vector<int>>>> found;
        for (const auto& base : levels_[k - 1]) {
            for (int mask = 1; mask < (1 << (k - 1)); ++mask) {
                if (budget) budget->tick();
                std::vector<std::vector<int>> adj = base;
                adj.resize(k);
                adj[k - 1].clear();
                for (int v = 0; v < k - 1; ++v)
                    if (mask & (1 << v)) {
                        adj[v].push_back(k - 1);
                        adj[k - 1].push_back(v);
                    }
                int e = 0;
                for (auto& l : adj) e += static_cast<int>(l.size());
                e /= 2;
                if (k >= 3 && e > 3 * k - 6) continue;
                if (!embed_planar(adj)) continue;
                auto code = canonical_code(adj);
                if (seen.insert(code).second) found.push_back({code, canonical_form(adj)});
            }
        }
        std::sort(found.begin(), found.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [code, adj] : found) levels_[k].push_back(std::move(adj));
    }

    if (embedded_[n].empty()) {
        for (const auto& adj : levels_[n]) {
            auto g = embed_planar(adj);
            if (!g) throw Error("stored graph failed to embed");
            embedded_[n].push_back(std::move(*g));
        }
    }
    return embedded_[n];
}

std::vector<PlaneGraph> enumerate_planar(int n, Budget* budget) {
    PlanarEnumerator en;
    return en.enumerate(n, budget);
}

}  // namespace pturan
