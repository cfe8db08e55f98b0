#include "mectree/latency.hpp"

#include <cmath>
#include <limits>

namespace mectree {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// load/capacity with the 0/0 -> 0 convention.
double rate_term(double load, double capacity) {
    if (load <= 0.0) return 0.0;
    if (capacity <= 0.0) return kInf;
    return load / capacity;
}

}  // namespace

double latency_lower_bound_from_flows(const Topology& topo, const Scenario& scen,
                                      const Assignment& s, const FlowState& flow) {
    double total = rate_term(flow.cc_raw, topo.cc_compute_cap());
    for (int v = 0; v < topo.var_count(); ++v)
        total += rate_term(s[v] * flow.raw_arrival[v], topo.compute_cap(v));
    for (const auto& parent : topo.parents()) {
        double sqrt_sum = 0.0;
        for (int c : parent.child_vars) sqrt_sum += std::sqrt(node_outflow(c, flow, s, scen));
        total += rate_term(sqrt_sum * sqrt_sum, parent.trans_mbps);
    }
    return total;
}

double latency_lower_bound(const Topology& topo, const Scenario& scen, const Assignment& s) {
    return latency_lower_bound_from_flows(topo, scen, s, propagate_flows(topo, scen, s));
}

Allocation cauchy_allocate(const Topology& topo, const Scenario& scen, const Assignment& s) {
    const FlowState flow = propagate_flows(topo, scen, s);
    Allocation alloc;
    alloc.theta.resize(topo.var_count());
    for (int v = 0; v < topo.var_count(); ++v) alloc.theta[v] = topo.compute_cap(v);
    alloc.theta_cc = topo.cc_compute_cap();
    alloc.phi_up.assign(topo.var_count(), 0.0);

    for (const auto& parent : topo.parents()) {
        double sqrt_sum = 0.0;
        std::vector<double> weights(parent.child_vars.size());
        for (size_t i = 0; i < parent.child_vars.size(); ++i) {
            weights[i] = std::sqrt(node_outflow(parent.child_vars[i], flow, s, scen));
            sqrt_sum += weights[i];
        }
        for (size_t i = 0; i < parent.child_vars.size(); ++i) {
            const int c = parent.child_vars[i];
            alloc.phi_up[c] = sqrt_sum > 0.0
                                  ? parent.trans_mbps * weights[i] / sqrt_sum
                                  : parent.trans_mbps / static_cast<double>(parent.child_vars.size());
        }
    }
    return alloc;
}

LatencyBreakdown system_latency(const Topology& topo, const Scenario& scen, const Assignment& s,
                                const Allocation& alloc) {
    const FlowState flow = propagate_flows(topo, scen, s);
    LatencyBreakdown lat;
    lat.cc_term = rate_term(flow.cc_raw, alloc.theta_cc);
    lat.per_layer.assign(topo.layer_count() - 1, 0.0);
    for (int v = 0; v < topo.var_count(); ++v) {
        const int layer = topo.node_of_var(v).layer;
        double term = rate_term(s[v] * flow.raw_arrival[v], alloc.theta[v]);
        term += rate_term(node_outflow(v, flow, s, scen), alloc.phi_up[v]);
        lat.per_layer[layer - 1] += term;
    }
    lat.total = lat.cc_term;
    for (double l : lat.per_layer) lat.total += l;
    return lat;
}

bool cauchy_split_within_edges(const Topology& topo, const Scenario& scen, const Assignment& s,
                               const FlowState& flow, double tol) {
    for (const auto& parent : topo.parents()) {
        double sqrt_sum = 0.0;
        double sqrt_max = 0.0;
        for (int c : parent.child_vars) {
            const double w = std::sqrt(node_outflow(c, flow, s, scen));
            sqrt_sum += w;
            sqrt_max = std::max(sqrt_max, w);
        }
        // o_j <= phi * sqrt(o_j)/sqrt_sum for all j reduces to the largest j.
        if (sqrt_max * sqrt_sum > parent.trans_mbps * (1.0 + tol) + tol) return false;
    }
    return true;
}

}  // namespace mectree
