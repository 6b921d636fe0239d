#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pturan/plane_graph.hpp"

namespace pturan {

/// Forbidden-substructure query.
///
/// ExactCycle(k): a cycle on exactly k vertices.
/// Theta(k): a k-cycle plus a chord at cycle-distance 2 (theta_k).
/// ThetaMember(k, d): a k-cycle plus a chord at cycle-distance d.
/// CircumferenceLess(k): the graph has no cycle of length >= k. Note the
/// inverted sense: matches() is true when the graph SATISFIES the bound.
struct Pattern {
    enum class Kind { ExactCycle, Theta, ThetaMember, CircumferenceLess };
    Kind kind;
    int k = 0;
    int d = 2;  // chord distance, theta kinds only

    static Pattern exact_cycle(int k);
    static Pattern theta(int k);
    static Pattern theta_member(int k, int d);
    static Pattern circumference_less(int k);

    /// CLI syntax: c<k>, theta<k>, theta<k>.<d>, circ<k>.
    static Pattern parse(const std::string& text);
    std::string name() const;
};

/// A k-cycle with a chord (u, w) at the pattern's cycle-distance.
struct ThetaWitness {
    Cycle cycle;
    std::pair<int, int> chord;
};

/// Verifies a witness against the host edge set.
bool theta_witness_valid(const PlaneGraph& g, const ThetaWitness& w, int k, int d);
bool cycle_witness_valid(const PlaneGraph& g, const Cycle& c, int k);

/// A simple cycle on exactly k vertices, or absence. Exhaustive search.
std::optional<Cycle> has_cycle_of_length(const PlaneGraph& g, int k, Budget* budget = nullptr);

/// A theta witness with chord distance d on a k-cycle, or verified absence.
/// For d = 2 iterates triangles first; otherwise enumerates k-cycles and
/// tests chords.
std::optional<ThetaWitness> has_theta(const PlaneGraph& g, int k, int d = 2, Budget* budget = nullptr);

/// Exact longest cycle length with a witness (branch and bound).
/// Throws on acyclic input.
std::pair<int, Cycle> circumference(const PlaneGraph& g, Budget* budget = nullptr);

/// True as soon as some cycle of length >= k exists (early exit).
bool has_cycle_at_least(const PlaneGraph& g, int k, Budget* budget = nullptr);

/// Exact minimum cycle length via per-vertex BFS. Throws on acyclic input.
int girth(const PlaneGraph& g);

struct MatchResult {
    bool matched = false;
    std::optional<Cycle> cycle;          // cycle evidence, when meaningful
    std::optional<ThetaWitness> theta;   // theta evidence
};

/// True iff g contains the pattern; for CircumferenceLess, true iff g has
/// no cycle of length >= k (the long cycle is returned as counter-evidence
/// when false).
MatchResult matches(const PlaneGraph& g, const Pattern& p, Budget* budget = nullptr);

/// Whether g is admissible for the extremal problem of pattern p:
/// pattern-free for cycle/theta kinds, circumference < k for the bound kind.
bool pattern_allows(const PlaneGraph& g, const Pattern& p, Budget* budget = nullptr);

}  // namespace pturan
