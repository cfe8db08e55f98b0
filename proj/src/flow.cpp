#include "mectree/flow.hpp"

#include <algorithm>
#include <cassert>

namespace mectree {

void propagate_flows_into(const Topology& topo, const Scenario& scen, const Assignment& s,
                          FlowState& out) {
    const int d = topo.var_count();
    assert(static_cast<int>(s.size()) == d);
    out.raw_arrival.assign(d, 0.0);
    out.processed_in.assign(d, 0.0);
    out.cc_raw = 0.0;
    out.cc_processed_in = 0.0;

    for (int v : topo.deep_first_order()) {
        const NodeId id = topo.node_of_var(v);
        if (id.layer == topo.ed_layer()) {
            out.raw_arrival[v] = scen.ed_rates_mbps[id.index];
        } else {
            double lambda = 0.0, beta = 0.0;
            for (int c : topo.child_vars(v)) {
                lambda += (1.0 - s[c]) * out.raw_arrival[c];
                beta += out.processed_in[c] + scen.rho * s[c] * out.raw_arrival[c];
            }
            out.raw_arrival[v] = lambda;
            out.processed_in[v] = beta;
        }
    }
    for (int c : topo.cc_child_vars()) {
        out.cc_raw += (1.0 - s[c]) * out.raw_arrival[c];
        out.cc_processed_in += out.processed_in[c] + scen.rho * s[c] * out.raw_arrival[c];
    }
}

FlowState propagate_flows(const Topology& topo, const Scenario& scen, const Assignment& s) {
    FlowState out;
    propagate_flows_into(topo, scen, s, out);
    return out;
}

double node_outflow(int var, const FlowState& flow, const Assignment& s, const Scenario& scen) {
    const double lambda = flow.raw_arrival[var];
    const double split = s[var];
    return scen.rho * split * lambda + (1.0 - split) * lambda + flow.processed_in[var];
}

std::vector<double> processed_rates(const Topology& topo, const FlowState& flow,
                                    const Assignment& s) {
    std::vector<double> p(topo.var_count());
    for (int v = 0; v < topo.var_count(); ++v) p[v] = s[v] * flow.raw_arrival[v];
    return p;
}

Assignment assignment_from_processed(const Topology& topo, const Scenario& scen,
                                     const std::vector<double>& p) {
    const int d = topo.var_count();
    assert(static_cast<int>(p.size()) == d);
    const std::vector<double> gen = subtree_generation(topo, scen);
    Assignment s(d, 0.0);
    std::vector<double> subtree_processed(d, 0.0);
    for (int v : topo.deep_first_order()) {
        double below = 0.0;
        for (int c : topo.child_vars(v)) below += subtree_processed[c];
        subtree_processed[v] = below + p[v];
        // Raw reaching v is its subtree generation minus raw processed below it.
        const double lambda = gen[v] - below;
        s[v] = lambda > 0.0 ? std::clamp(p[v] / lambda, 0.0, 1.0) : 0.0;
    }
    return s;
}

}  // namespace mectree
