#pragma once

#include <string>
#include <vector>

#include "mectree/flow.hpp"
#include "mectree/topology.hpp"

namespace mectree {

enum class RowKind { BoxLower, BoxUpper, Compute, CcCompute, Transmission };

std::string to_string(RowKind kind);

// One inequality a.p <= b over the processed-rate coordinates p_v = s_v * lambda_v.
struct ConstraintRow {
    std::vector<double> coeffs;
    double bound = 0.0;
    RowKind kind = RowKind::BoxLower;
    NodeId subject;  // the node (or parent) the row belongs to
};

// The congestion-free constraint polytope. In p-coordinates every row is
// exactly linear: box rows become p >= 0 and subtree-processed <= subtree
// generation, compute rows p <= theta_u, transmission rows bound what a
// parent's children must push upward, and the CC row bounds residual raw.
// Carries enough per-variable context to map assignments into p and back.
struct LinearConstraintSet {
    struct Var {
        NodeId id;
        double subtree_gen = 0.0;          // raw generated at or below this node
        std::vector<int> children;         // variable indices one layer down
    };

    std::vector<Var> vars;
    std::vector<ConstraintRow> rows;
    double rho = 0.0;
    double total_gen = 0.0;

    int dimension() const { return static_cast<int>(vars.size()); }

    // p-vector corresponding to an assignment (propagates flows internally).
    std::vector<double> to_processed(const Assignment& s) const;
    // Inverse map; splits of zero-arrival nodes are canonically 0.
    Assignment to_assignment(const std::vector<double>& p) const;

    // Row counts excluding box rows: (K_c, K_t).
    std::pair<int, int> row_counts() const;
};

// Builds the full row system for the scenario. Row order is deterministic:
// box-lower, box-upper, compute (variable order), the CC row, then
// transmission rows by parent (CC first).
LinearConstraintSet assemble_constraints(const Topology& topo, const Scenario& scen);

struct FeasibilityReport {
    struct Violation {
        int row = 0;
        double lhs = 0.0;
        double bound = 0.0;
        double slack = 0.0;  // bound - lhs, negative when violated
    };
    bool feasible = true;
    std::vector<Violation> violations;
};

// A row a.p <= b passes when a.p <= b*(1+tol) + tol.
bool row_satisfied(const ConstraintRow& row, const std::vector<double>& p, double tol);

FeasibilityReport check_feasible_point(const LinearConstraintSet& cs,
                                       const std::vector<double>& p, double tol = 1e-9);

// Assignment-level feasibility: converts s to p and checks every row.
FeasibilityReport check_feasible(const LinearConstraintSet& cs, const Assignment& s,
                                 double tol = 1e-9);

struct ConstraintCount {
    int compute = 0;       // K_c: one row per node including the CC
    int transmission = 0;  // K_t: one row per parent node
    int total = 0;         // K = K_c + K_t
};

ConstraintCount constraint_count(const Topology& topo);

}  // namespace mectree
