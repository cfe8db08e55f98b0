#pragma once

#include <limits>
#include <vector>

#include "mectree/constraints.hpp"
#include "mectree/latency.hpp"
#include "mectree/vertices.hpp"

namespace mectree {

enum class SolveStatus { Ok, Congested };

struct SolverDiagnostics {
    double subsets_total = 0;
    long long subsets_examined = 0;
    long long vertices_examined = 0;       // candidate basic solutions solved
    long long feasible_vertices = 0;       // after feasibility + dedup
    long long rejected_by_edge_split = 0;  // feasible vertices whose Cauchy split overloads an uplink
    bool truncated = false;
    double grid_points_total = 0;          // oracle only
    long long grid_points_feasible = 0;    // oracle only
};

struct Solution {
    SolveStatus status = SolveStatus::Congested;
    Assignment s_star;
    std::vector<double> p_star;
    Allocation allocation;
    LatencyBreakdown latency;
    double latency_bound = std::numeric_limits<double>::infinity();
    std::vector<int> active_rows;  // rows tight at the optimum
    SolverDiagnostics diagnostics;
};

struct SolverOptions {
    double feas_tol = 1e-9;
    double tie_tol = 1e-9;     // latency ties resolved toward the lexicographically smaller s
    double active_tol = 1e-8;
    long long subset_cap = 2'000'000;
    bool edge_split_guard = true;
};

// Vertex search for the latency-optimal split: enumerates the basic feasible
// points of the congestion-free polytope, skips those whose Cauchy split
// would overload an individual uplink, and returns the argmin of the latency
// lower bound with full allocation and diagnostics. A congested result (not
// an exception) signals an empty feasible set.
Solution solve_lma(const Topology& topo, const Scenario& scen, const SolverOptions& opts = {});

struct OracleOptions {
    double feas_tol = 1e-9;
    double budget = 2e8;  // max grid evaluations
    bool edge_split_guard = true;
};

// Exhaustive grid search over splits in [0,1]^D used to cross-check the
// vertex solver. Applies the same feasibility rules. Throws BudgetExceeded
// when the grid would not fit the evaluation budget.
Solution oracle_grid_search(const Topology& topo, const Scenario& scen, double step,
                            const OracleOptions& opts = {});

}  // namespace mectree
