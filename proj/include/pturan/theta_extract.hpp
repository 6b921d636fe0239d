#pragma once

#include <optional>

#include "pturan/patterns.hpp"
#include "pturan/plane_graph.hpp"

namespace pturan {

class NoLongCycle : public Error {
public:
    explicit NoLongCycle(int k)
        : Error("no cycle of length >= " + std::to_string(k)) {}
};

class DichotomyViolated : public Error {
public:
    DichotomyViolated() : Error("theta extraction: no reduction applies (dichotomy violated)") {}
};

/// Constructive theta extraction on a near triangulation: transforms a
/// cycle of length >= k into a k-cycle with a distance-2 chord by
/// repeatedly shrinking the number of faces inside the cycle.
///
/// Per iteration, with current cycle |C| >= k:
///   (a) |C| = k and some v on C has cycle-neighbors joined by an edge:
///       done, that edge is the chord.
///   (b) |C| > k and some v on C spans a facial triangle of the interior:
///       bypass v through the triangle's base (length -1).
///   (c) some edge uv of C lies in an interior facial triangle whose apex x
///       is strictly inside: reroute through x (length +1).
/// Both (b) and (c) remove exactly one interior face, so the loop ends.
ThetaWitness find_theta(const PlaneGraph& g, int k, std::optional<Cycle> seed = std::nullopt,
                        Budget* budget = nullptr);

}  // namespace pturan
