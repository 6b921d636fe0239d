#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pturan/plane_graph.hpp"

namespace pturan {

/// Planarity test and embedding by face-based incremental insertion
/// (Demoucron-Malgrange-Pertuiset per block, blocks merged at cut
/// vertices). Returns a rotation-system embedding or nullopt.
std::optional<PlaneGraph> embed_planar(const std::vector<std::vector<int>>& adj);

/// Canonical form: the minimum adjacency-matrix encoding over vertex
/// permutations compatible with iterated degree-partition refinement.
/// Encoded as the upper-triangle columns, lexicographically comparable.
std::vector<std::uint32_t> canonical_code(const std::vector<std::vector<int>>& adj);

/// Applies the canonicalizing permutation and returns the relabeled
/// adjacency lists (sorted).
std::vector<std::vector<int>> canonical_form(const std::vector<std::vector<int>>& adj);

/// Exactly one representative per isomorphism class of connected planar
/// simple graphs on n vertices, each with a valid rotation system, in
/// canonical-code order. Grown one vertex at a time with canonical-form
/// rejection; levels are memoized per enumerator.
class PlanarEnumerator {
public:
    const std::vector<PlaneGraph>& enumerate(int n, Budget* budget = nullptr);

private:
    std::vector<std::vector<std::vector<std::vector<int>>>> levels_;  // [n] -> adjacency lists
    std::vector<std::vector<PlaneGraph>> embedded_;
};

/// One-shot convenience wrapper.
std::vector<PlaneGraph> enumerate_planar(int n, Budget* budget = nullptr);

}  // namespace pturan
