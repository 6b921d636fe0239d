#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pturan/circuit_graph.hpp"
#include "pturan/plane_graph.hpp"

namespace pturan {

/// A near-triangulation subgraph of a host graph: the subgraph carries its
/// own outer cycle; embedding_map injects its labels into the host.
struct NtWitness {
    PlaneGraph subgraph;
    std::vector<int> embedding_map;
};

/// One recursion step of the extractor. Tags: A = outer-contact split,
/// B = boundary-path deletion, C = one-vertex contact, D = interior sector.
struct ExtractStep {
    char tag;
    std::vector<int> face;  // handled face, host labels
    int m_before;
    int m_after;  // deficiency of the piece recursed into (0 on success)
    std::string note;
};

struct ExtractTrace {
    std::vector<ExtractStep> steps;
};

class PreconditionViolated : public Error {
public:
    PreconditionViolated(int m, int v, int t)
        : Error("precondition violated: (3t-7)*m = " + std::to_string((3 * t - 7) * m) +
                " must be < v-(t-1) = " + std::to_string(v - (t - 1)) + " (m=" + std::to_string(m) +
                ", v=" + std::to_string(v) + ", t=" + std::to_string(t) + ")"),
          m_(m), v_(v), t_(t) {}
    int m() const { return m_; }
    int v() const { return v_; }
    int t() const { return t_; }

private:
    int m_, v_, t_;
};

/// Constructive extraction: given a circuit graph with
/// (3t-7) * m(G) < v(G) - (t-1) and v(G) >= t, returns a near-triangulation
/// subgraph on >= t vertices together with the recursion trace.
std::pair<NtWitness, ExtractTrace> find_near_triangulation(const CircuitGraph& cg, int t);

/// Brute-force oracle: present iff some cycle's interior is a near
/// triangulation on >= t vertices. Enumerates edge-connected unions of
/// interior triangular faces; a disc on >= t vertices exists iff one with
/// at most 2t-5 faces does (peel boundary faces one at a time).
std::optional<NtWitness> oracle_near_triangulation(const PlaneGraph& g, int t,
                                                   Budget* budget = nullptr);

/// Re-validates a witness against the host: subgraph embedding, interior
/// triangles, vertex bound.
bool nt_witness_valid(const PlaneGraph& host, const NtWitness& w, int t);

}  // namespace pturan
