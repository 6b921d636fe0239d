#pragma once

#include <utility>
#include <vector>

#include "pturan/circuit_graph.hpp"
#include "pturan/plane_graph.hpp"

namespace pturan {

/// Parameters of one chain-gluing step: where on the host boundary the
/// copies attach, and which boundary edge of each copy is identified.
/// Ordered pairs are consecutive steps of the respective outer walks.
struct GluingSpec {
    std::pair<int, int> host_edge;                    // (u, v), u->v on the host outer walk
    std::vector<std::pair<int, int>> copy_edges;      // (a_j, b_j), a_j->b_j on each copy's outer walk
};

/// Triangle with a designated outer face (3 vertices).
PlaneGraph triangle_fixture();

/// K_4 embedded with a designated outer triangle.
PlaneGraph k4_fixture();

/// Stacked triangulation on v vertices: triangle plus repeated apex
/// insertion into the lexicographically least interior face.
PlaneGraph stacked_triangulation(int v);

/// Inserts one apex into the given face (walk of the current embedding).
PlaneGraph insert_apex(const PlaneGraph& g, const Walk& face_walk);

/// Inserts an apex into every face, `iterations` times. The result is a
/// triangulation with e = 3v - 6; face count triples per iteration.
PlaneGraph kleetope(const PlaneGraph& base, int iterations);

/// Chain construction: start from a (t-1)-vertex stacked triangulation and
/// per iteration glue three fresh copies around the designated boundary
/// edge, creating one interior quadrilateral face and 3t-7 new vertices.
CircuitGraph sharp_chain(int t, int iterations);

/// Subdivides every host edge and replaces each host vertex (degree 2 or 3)
/// by a copy of B attached through the vertices of face_triangle, honoring
/// rotation order. Counts: v' = v_h*v(B) + e_h, e' = v_h*e(B) + 2*e_h.
PlaneGraph substitute(const PlaneGraph& host, const PlaneGraph& block,
                      const std::vector<int>& face_triangle);

/// The 13-vertex near triangulation with an outer 12-cycle that has a
/// theta chord at distance 2 but none at distance 6.
PlaneGraph figure2_fixture();

}  // namespace pturan
