#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pturan {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by parse_plg on malformed input; `line` is 1-based.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

/// Trap for states the underlying arguments rule out; must never fire.
class InternalInvariantBroken : public Error {
public:
    explicit InternalInvariantBroken(const std::string& what)
        : Error("internal invariant broken: " + what) {}
};

/// Node/time budget threaded through the exponential searches.
/// tick() throws BudgetExceeded once the node cap or deadline is hit.
struct Budget {
    std::uint64_t max_nodes = 500'000'000ULL;
    std::uint64_t used = 0;
    std::chrono::steady_clock::time_point deadline{};  // zero = none

    static Budget with_seconds(double seconds, std::uint64_t nodes = 500'000'000ULL) {
        Budget b;
        b.max_nodes = nodes;
        b.deadline = std::chrono::steady_clock::now() +
                     std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
        return b;
    }

    void tick(std::uint64_t n = 1) {
        used += n;
        if (used > max_nodes)
            throw BudgetExceeded("search budget exceeded (" + std::to_string(max_nodes) + " nodes)");
        if (deadline.time_since_epoch().count() != 0 && (used & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            throw BudgetExceeded("search budget exceeded (time limit)");
    }
};

using Cycle = std::vector<int>;  // vertex sequence; closing edge implicit
using Walk = std::vector<int>;   // face boundary walk, may repeat vertices

/// Faces of an embedding. Each directed edge of the graph appears in
/// exactly one walk. `outer` indexes the designated outer face, or -1.
struct FaceSet {
    std::vector<Walk> walks;
    int outer = -1;

    int size() const { return static_cast<int>(walks.size()); }
    const Walk& outer_walk() const { return walks.at(outer); }
};

/// A simple connected graph with a clockwise rotation system defining a
/// sphere embedding, plus an optional designated outer face.
///
/// Faces are traced with the next-edge rule: after arriving along u->v the
/// walk continues to the clockwise successor of u around v. Interior faces
/// come out counterclockwise as drawn, the outer face clockwise.
class PlaneGraph {
public:
    /// Validates symmetry, simplicity, connectivity and Euler's formula;
    /// if `outer` is given it must match one traced face up to
    /// rotation/reflection (stored as the traced walk).
    PlaneGraph(std::vector<std::vector<int>> rotation, std::optional<Walk> outer = std::nullopt);

    int vertex_count() const { return n_; }
    int edge_count() const { return e_; }
    const std::vector<std::vector<int>>& rotations() const { return rotation_; }
    const std::vector<int>& rotation(int v) const { return rotation_.at(v); }
    int degree(int v) const { return static_cast<int>(rotation_.at(v).size()); }
    bool has_edge(int u, int v) const;
    bool has_outer() const { return faces_.outer >= 0; }
    const Walk& outer_walk() const { return faces_.outer_walk(); }

    const FaceSet& faces() const { return faces_; }
    /// Index of the face whose walk contains the directed edge u->v.
    int face_left_of(int u, int v) const;
    /// Clockwise successor of u in the rotation at v.
    int cw_successor(int v, int u) const;

    /// All edges as (min,max) pairs in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    /// Returns a copy with a different face designated as outer.
    PlaneGraph with_outer(const Walk& walk) const;

    std::string serialize() const;

private:
    int n_ = 0;
    int e_ = 0;
    std::vector<std::vector<int>> rotation_;
    FaceSet faces_;
    std::vector<std::vector<int>> edge_face_;  // edge_face_[v][i]: face left of v->rotation_[v][i]

    void trace_all_faces();
};

/// Parses the PLG text format; errors name the offending line.
PlaneGraph parse_plg(const std::string& text);

/// A subgraph together with the injection of its labels into the host.
struct Sub {
    PlaneGraph graph;
    std::vector<int> to_host;  // to_host[i] = host label of vertex i
};

/// Faces traced by the standard next-edge rule of a rotation system,
/// without requiring a validated PlaneGraph (used internally).
std::vector<Walk> trace_rotation_faces(const std::vector<std::vector<int>>& rotation);

/// The facial-cycle walks of g (same data as g.faces(), named per contract).
FaceSet trace_faces(const PlaneGraph& g);

/// True if `walk` equals `face` as a cyclic sequence up to rotation and
/// reflection.
bool same_cyclic(const Walk& walk, const Walk& face);

/// Marks the faces on the outer side of c: reachable from the designated
/// outer face in the dual without crossing edges of c.
std::vector<char> faces_outside_cycle(const PlaneGraph& g, const Cycle& c);

/// Subgraph of everything inside or on the cycle c, with inherited
/// rotations and c designated as outer. Requires g to have an outer face.
Sub interior_of_cycle(const PlaneGraph& g, const Cycle& c);

/// All vertex subsets of the given size (1 or 2) whose removal
/// disconnects g, in lexicographic order.
std::vector<std::vector<int>> cuts(const PlaneGraph& g, int size);

/// Outer walk of the embedded subgraph spanned by `edge_set`: the face of
/// the subgraph whose region contains g's outer face. `edge_set` must span
/// a connected subgraph.
Walk outer_walk_of_subgraph(const PlaneGraph& g, const std::vector<std::pair<int, int>>& edge_set);

bool is_connected_adj(const std::vector<std::vector<int>>& adj);

/// Biconnected components as edge lists (bridges are single-edge blocks).
std::vector<std::vector<std::pair<int, int>>> biconnected_components(
    const std::vector<std::vector<int>>& adj);

}  // namespace pturan
