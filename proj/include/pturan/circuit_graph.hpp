#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pturan/plane_graph.hpp"

namespace pturan {

/// Why validate_circuit_graph rejected a (graph, cycle) pair.
struct CircuitViolation {
    enum class Kind { NotTwoConnected, NotFacial, BadTwoCut };
    Kind kind;
    std::vector<int> cut;        // cut vertex / 2-cut, when applicable
    std::vector<int> component;  // offending component for BadTwoCut

    std::string describe() const;
};

class CircuitGraphError : public Error {
public:
    explicit CircuitGraphError(CircuitViolation v) : Error(v.describe()), violation_(std::move(v)) {}
    const CircuitViolation& violation() const { return violation_; }

private:
    CircuitViolation violation_;
};

/// A 2-connected plane graph with a designated outer facial cycle C such
/// that every 2-cut leaves all components touching C.
class CircuitGraph {
public:
    const PlaneGraph& graph() const { return graph_; }
    const Cycle& outer_cycle() const { return outer_cycle_; }
    int vertex_count() const { return graph_.vertex_count(); }
    int edge_count() const { return graph_.edge_count(); }

private:
    friend std::variant<CircuitGraph, CircuitViolation> check_circuit_graph(const PlaneGraph&,
                                                                            const Cycle&);
    CircuitGraph(PlaneGraph g, Cycle c) : graph_(std::move(g)), outer_cycle_(std::move(c)) {}
    PlaneGraph graph_;   // outer face set to the circuit cycle
    Cycle outer_cycle_;  // its traced walk
};

/// Certifies 2-connectivity, that c is facial, and the 2-cut condition.
std::variant<CircuitGraph, CircuitViolation> check_circuit_graph(const PlaneGraph& g, const Cycle& c);

/// Throwing form of check_circuit_graph.
CircuitGraph validate_circuit_graph(const PlaneGraph& g, const Cycle& c);

/// m(G) = 3v - 6 - e - (|C| - 3), the interior edges missing from a near
/// triangulation; always equals the sum of |F|-3 over interior faces.
int deficiency_m(const CircuitGraph& cg);

/// Sum of |F|-3 over interior faces of a plane graph with designated outer
/// face (the cross-check route for deficiency_m).
int interior_face_deficiency(const PlaneGraph& g);

/// True if every interior face is a triangle and the outer face is a
/// simple cycle (2-connected).
bool is_near_triangulation(const PlaneGraph& g);

}  // namespace pturan
