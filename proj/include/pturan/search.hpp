#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pturan/enumerate.hpp"
#include "pturan/patterns.hpp"
#include "pturan/plane_graph.hpp"

namespace pturan {

/// One named bound comparison. Formulas outside their stated n-range are
/// reported as NotApplicable rather than checked.
struct BoundRow {
    enum class Status { Satisfied, Violated, NotApplicable };
    std::string name;
    double value;
    Status status;
};

/// Result of ex_p(n, pattern): the exact extremal edge count, a witness,
/// applicable bound rows and enumeration statistics. For CircumferenceLess
/// the admissible graphs are those whose circumference stays below k
/// (see the pattern's inverted sense).
struct SearchReport {
    int n;
    Pattern pattern;
    int max_edges;
    PlaneGraph witness;
    std::vector<BoundRow> bounds;
    std::uint64_t graphs_enumerated = 0;
    std::uint64_t detector_calls = 0;
};

/// Exact planar Turan number over connected planar graphs on n vertices,
/// by exhaustive isomorph-free enumeration. Candidates are scanned in
/// (edge count descending, canonical code) order so the first admissible
/// graph is the extremal witness; `jobs` parallelizes detector calls
/// without affecting the result.
SearchReport ex_p(int n, const Pattern& p, int jobs = 1, Budget* budget = nullptr,
                  PlanarEnumerator* shared = nullptr);

/// Bound rows for a computed extremal value.
std::vector<BoundRow> bound_rows_for(int n, int k, const Pattern& p, int max_edges);

/// Runs ex_p for the family pattern of (k, family) and attaches every
/// applicable formula row. family: "cycle", "theta", "circumference".
SearchReport check_bound(int n, int k, const std::string& family, int jobs = 1,
                         Budget* budget = nullptr, PlanarEnumerator* shared = nullptr);

/// CSV rows: n, pattern, max_edges, witness_plg_path, bound_name,
/// bound_value, satisfied (one line per bound row; decimal ASCII).
std::string report_csv(const SearchReport& report, const std::string& witness_path,
                       bool header = true);

}  // namespace pturan
