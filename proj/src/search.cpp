#include "pturan/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

namespace pturan {

namespace {

double theorem_bound(int n, int k) { return 3.0 * n - 6.0 - n / (4.0 * std::pow(k, std::log2(3.0))); }

}  // namespace

SearchReport ex_p(int n, const Pattern& p, int jobs, Budget* budget, PlanarEnumerator* shared) {
    if (n < 3) throw Error("ex_p requires n >= 3");
    PlanarEnumerator local;
    PlanarEnumerator& en = shared ? *shared : local;
    const std::vector<PlaneGraph>& graphs = en.enumerate(n, budget);

    // scan in (edges desc, canonical order): first admissible graph wins
    std::vector<int> order(graphs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return graphs[a].edge_count() > graphs[b].edge_count(); });

    SearchReport report{n, p, -1, graphs.empty() ? PlaneGraph({{}}) : graphs[0], {}, graphs.size(), 0};
    int total = static_cast<int>(order.size());
    if (jobs < 1) jobs = 1;
    int found = -1;
    std::uint64_t calls = 0;
    int batch = std::max(32, jobs * 16);
    for (int begin = 0; begin < total && found < 0; begin += batch) {
        int end = std::min(total, begin + batch);
        std::vector<char> ok(end - begin, 0);
        if (jobs == 1) {
            for (int i = begin; i < end; ++i) ok[i - begin] = pattern_allows(graphs[order[i]], p);
        } else {
            std::atomic<int> next{begin};
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t)
                pool.emplace_back([&]() {
                    while (true) {
                        int i = next.fetch_add(1);
                        if (i >= end) return;
                        ok[i - begin] = pattern_allows(graphs[order[i]], p);
                    }
                });
            for (auto& th : pool) th.join();
        }
        calls += end - begin;
        for (int i = begin; i < end; ++i)
            if (ok[i - begin]) {
                found = order[i];
                break;
            }
    }
    report.detector_calls = calls;
    if (found < 0) throw Error("ex_p: no admissible graph found");
    report.max_edges = graphs[found].edge_count();
    report.witness = graphs[found];
    return report;
}

std::vector<BoundRow> bound_rows_for(int n, int k, const Pattern& p, int max_edges) {
    std::vector<BoundRow> rows;
    auto status = [&](bool applicable, bool ok) {
        return !applicable ? BoundRow::Status::NotApplicable
                           : (ok ? BoundRow::Status::Satisfied : BoundRow::Status::Violated);
    };
    switch (p.kind) {
        case Pattern::Kind::ExactCycle: {
            if (k == 3)
                rows.push_back({"euler_c3_exact", 2.0 * n - 4.0,
                                status(n >= 3, max_edges == 2 * n - 4)});
            if (k == 4)
                rows.push_back({"dowden_c4", 15.0 * (n - 2) / 7.0,
                                status(n >= 4, 7 * max_edges <= 15 * (n - 2))});
            if (k == 5)
                rows.push_back({"dowden_c5", (12.0 * n - 33.0) / 5.0,
                                status(n >= 11, 5 * max_edges <= 12 * n - 33)});
            if (k == 6)
                rows.push_back({"ghosh_c6", 5.0 * n / 2.0 - 7.0,
                                status(n >= 18, 2 * max_edges <= 5 * n - 14)});
            if (k >= 4)
                rows.push_back({"cycle_gap", theorem_bound(n, k),
                                status(n >= 4, max_edges <= theorem_bound(n, k))});
            break;
        }
        case Pattern::Kind::Theta:
        case Pattern::Kind::ThetaMember: {
            rows.push_back({"theta_gap", theorem_bound(n, k),
                            status(p.d == 2 && n >= 4 && k >= 4,
                                   max_edges <= theorem_bound(n, k))});
            break;
        }
        case Pattern::Kind::CircumferenceLess: {
            rows.push_back({"circumference_gap", theorem_bound(n, k),
                            status(n >= 4 && k >= 4, max_edges <= theorem_bound(n, k))});
            break;
        }
    }
    rows.push_back({"planarity_cap", 3.0 * n - 6.0, status(n >= 3, max_edges <= 3 * n - 6)});
    return rows;
}

SearchReport check_bound(int n, int k, const std::string& family, int jobs, Budget* budget,
                         PlanarEnumerator* shared) {
    Pattern p;
    if (family == "cycle")
        p = Pattern::exact_cycle(k);
    else if (family == "theta")
        p = Pattern::theta(k);
    else if (family == "circumference")
        p = Pattern::circumference_less(k);
    else
        throw Error("check_bound: family must be cycle, theta or circumference");
    SearchReport report = ex_p(n, p, jobs, budget, shared);
    report.bounds = bound_rows_for(n, k, p, report.max_edges);
    return report;
}

std::string report_csv(const SearchReport& report, const std::string& witness_path, bool header) {
    std::ostringstream os;
    if (header) os << "n,pattern,max_edges,witness_plg_path,bound_name,bound_value,satisfied\n";
    auto row = [&](const std::string& name, double value, const std::string& sat) {
        os << report.n << "," << report.pattern.name() << "," << report.max_edges << ","
           << witness_path << "," << name << ",";
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f", value);
        os << buf << "," << sat << "\n";
    };
    if (report.bounds.empty()) {
        row("none", 0.0, "na");
    } else {
        for (const auto& b : report.bounds)
            row(b.name, b.value,
                b.status == BoundRow::Status::Satisfied
                    ? "yes"
                    : (b.status == BoundRow::Status::Violated ? "no" : "na"));
    }
    return os.str();
}

}  // namespace pturan
