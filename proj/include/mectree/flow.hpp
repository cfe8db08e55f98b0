#pragma once

#include <vector>

#include "mectree/topology.hpp"

namespace mectree {

// Per-node task split fractions in [0, 1], variable-indexed.
using Assignment = std::vector<double>;

// Steady-state flow rates implied by an assignment. raw_arrival and
// processed_in are variable-indexed; cc_raw / cc_processed_in are the rates
// reaching the cloud center.
struct FlowState {
    std::vector<double> raw_arrival;    // lambda
    std::vector<double> processed_in;   // beta
    double cc_raw = 0.0;
    double cc_processed_in = 0.0;
};

// Bottom-up pass: each parent receives the children's unprocessed raw data
// plus their (compressed) processing output.
FlowState propagate_flows(const Topology& topo, const Scenario& scen, const Assignment& s);

// Allocation-free variant for hot loops; `out` vectors are resized as needed.
void propagate_flows_into(const Topology& topo, const Scenario& scen, const Assignment& s,
                          FlowState& out);

// Full uplink load of a non-CC node: rho*s*lambda + (1-s)*lambda + beta.
double node_outflow(int var, const FlowState& flow, const Assignment& s, const Scenario& scen);

// Raw data processed locally at each node: p_v = s_v * lambda_v. This is the
// coordinate system in which the congestion-free constraints are linear.
std::vector<double> processed_rates(const Topology& topo, const FlowState& flow,
                                    const Assignment& s);

// Inverse map: recovers splits from per-node processed rates. Nodes with no
// raw arrival get the canonical split 0.
Assignment assignment_from_processed(const Topology& topo, const Scenario& scen,
                                     const std::vector<double>& p);

}  // namespace mectree
