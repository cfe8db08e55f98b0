#pragma once

#include <vector>

#include "mectree/flow.hpp"
#include "mectree/topology.hpp"

namespace mectree {

// Committed compute capacity per node plus the uplink capacity each node is
// granted by its parent. phi_up is variable-indexed (every non-CC node has
// exactly one uplink).
struct Allocation {
    std::vector<double> theta;   // per non-CC node
    double theta_cc = 0.0;
    std::vector<double> phi_up;  // per non-CC node
};

// Steady-state latency contributions: compute and transmission time summed
// per layer (index 0 holds layer 1), plus the CC compute term.
struct LatencyBreakdown {
    double cc_term = 0.0;
    std::vector<double> per_layer;
    double total = 0.0;
};

// Lower envelope of the achievable latency over all resource allocations for
// a fixed split: cc_raw/theta_cc_u + sum s*lambda/theta_u + per-parent
// (sum of sqrt child outflows)^2 / phi. Infeasible splits (load on a
// zero-capacity resource) evaluate to +infinity.
double latency_lower_bound(const Topology& topo, const Scenario& scen, const Assignment& s);
double latency_lower_bound_from_flows(const Topology& topo, const Scenario& scen,
                                      const Assignment& s, const FlowState& flow);

// The allocation attaining the bound: full compute commitment everywhere and
// uplink capacity split proportionally to the square root of each child's
// outflow. Children with zero outflow get nothing; if every child is idle
// the budget is split evenly (immaterial).
Allocation cauchy_allocate(const Topology& topo, const Scenario& scen, const Assignment& s);

// Latency of a concrete allocation. Zero-load terms on zero-capacity
// resources contribute nothing; loaded zero-capacity resources yield +inf.
LatencyBreakdown system_latency(const Topology& topo, const Scenario& scen, const Assignment& s,
                                const Allocation& alloc);

// Checks the per-uplink transmission constraint under the Cauchy split:
// outflow_j <= phi_parent * sqrt(o_j) / sum(sqrt(o)). Stricter than the
// aggregate per-parent row whenever a parent has unevenly loaded children.
bool cauchy_split_within_edges(const Topology& topo, const Scenario& scen, const Assignment& s,
                               const FlowState& flow, double tol = 1e-9);

}  // namespace mectree
