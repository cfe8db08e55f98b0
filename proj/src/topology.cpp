#include "mectree/topology.hpp"

#include <algorithm>
#include <numeric>

namespace mectree {

namespace {

std::string node_label(const TopologySpec& raw, int layer, int index) {
    const auto& name = raw.layers[layer].name;
    std::string label = to_string(NodeId{layer, index});
    if (!name.empty()) label += " (" + name + ")";
    return label;
}

}  // namespace

Topology build_topology(const TopologySpec& raw) {
    const int n_layers = static_cast<int>(raw.layers.size());
    if (n_layers < 2)
        throw ValidationError("topology needs at least two layers (CC plus edge devices)");
    if (raw.layers[0].nodes.size() != 1)
        throw ValidationError("layer 0 must contain exactly one node (the CC), got " +
                              std::to_string(raw.layers[0].nodes.size()));

    Topology topo;
    topo.layers_.resize(n_layers);
    topo.layer_names_.resize(n_layers);
    topo.var_index_.resize(n_layers);

    for (int n = 0; n < n_layers; ++n) {
        const auto& layer = raw.layers[n];
        if (layer.nodes.empty())
            throw ValidationError("layer " + std::to_string(n) + " is empty");
        topo.layer_names_[n] = layer.name;
        topo.layers_[n].resize(layer.nodes.size());
        topo.var_index_[n].assign(layer.nodes.size(), -1);

        for (int i = 0; i < static_cast<int>(layer.nodes.size()); ++i) {
            const auto& rn = layer.nodes[i];
            auto& node = topo.layers_[n][i];
            if (rn.compute_mbps < 0)
                throw ValidationError("negative compute capacity at " + node_label(raw, n, i));
            if (rn.trans_mbps < 0)
                throw ValidationError("negative transmission resource at " + node_label(raw, n, i));
            if (n == n_layers - 1 && rn.trans_mbps > 0)
                throw ValidationError("edge device " + node_label(raw, n, i) +
                                      " declares transmission resources but has no children");
            node.spec = NodeSpec{rn.compute_mbps, rn.trans_mbps};

            if (n == 0) {
                if (rn.parent >= 0)
                    throw ValidationError("the CC cannot have a parent");
                continue;
            }
            const int expect = n - 1;
            const int plzr = rn.parent_layer == TopologySpec::kAdjacent ? expect : rn.parent_layer;
            if (plzr != expect)
                throw ValidationError("layer-skipping edge: " + node_label(raw, n, i) +
                                      " names a parent on layer " + std::to_string(plzr) +
                                      ", expected layer " + std::to_string(expect));
            if (rn.parent < 0)
                throw ValidationError("orphan node " + node_label(raw, n, i) + ": no parent given");
            if (rn.parent >= static_cast<int>(raw.layers[expect].nodes.size()))
                throw ValidationError("orphan node " + node_label(raw, n, i) +
                                      ": parent index " + std::to_string(rn.parent) +
                                      " out of range for layer " + std::to_string(expect));
            node.parent = rn.parent;
            topo.layers_[expect][rn.parent].children.push_back(i);
        }
    }

    // Dense variable indexing over non-CC nodes, (layer, index) ascending.
    for (int n = 1; n < n_layers; ++n) {
        for (int i = 0; i < topo.layer_size(n); ++i) {
            topo.var_index_[n][i] = static_cast<int>(topo.var_nodes_.size());
            topo.var_nodes_.push_back(NodeId{n, i});
        }
    }
    const int d = topo.var_count();
    topo.parent_var_.resize(d);
    topo.child_vars_.resize(d);
    for (int v = 0; v < d; ++v) {
        const NodeId id = topo.var_nodes_[v];
        const auto& node = topo.node(id);
        topo.parent_var_[v] = id.layer == 1 ? -1 : topo.var_index_[id.layer - 1][node.parent];
        for (int c : node.children) topo.child_vars_[v].push_back(topo.var_index_[id.layer + 1][c]);
    }
    for (int i = 0; i < topo.layer_size(1); ++i) topo.cc_child_vars_.push_back(topo.var_index_[1][i]);

    auto add_parent = [&](NodeId id, int var, double trans, const std::vector<int>& kids) {
        if (kids.empty()) return;
        Topology::Parent p;
        p.id = id;
        p.var = var;
        p.trans_mbps = trans;
        p.child_vars = kids;
        topo.parents_.push_back(std::move(p));
    };
    add_parent(NodeId{0, 0}, -1, topo.cc_trans_budget(), topo.cc_child_vars_);
    for (int v = 0; v < d; ++v)
        add_parent(topo.var_nodes_[v], v, topo.spec(topo.var_nodes_[v]).trans_mbps,
                   topo.child_vars_[v]);

    topo.deep_first_.resize(d);
    std::iota(topo.deep_first_.begin(), topo.deep_first_.end(), 0);
    std::sort(topo.deep_first_.begin(), topo.deep_first_.end(), [&](int a, int b) {
        const NodeId& na = topo.var_nodes_[a];
        const NodeId& nb = topo.var_nodes_[b];
        if (na.layer != nb.layer) return na.layer > nb.layer;
        return na.index < nb.index;
    });
    return topo;
}

TopologySpec Topology::to_spec() const {
    TopologySpec raw;
    raw.layers.resize(layers_.size());
    for (int n = 0; n < layer_count(); ++n) {
        raw.layers[n].name = layer_names_[n];
        for (const auto& node : layers_[n]) {
            TopologySpec::Node rn;
            rn.compute_mbps = node.spec.compute_mbps;
            rn.trans_mbps = node.spec.trans_mbps;
            rn.parent = node.parent;
            raw.layers[n].nodes.push_back(rn);
        }
    }
    return raw;
}

void validate_scenario(const Topology& topo, const Scenario& scen) {
    if (static_cast<int>(scen.ed_rates_mbps.size()) != topo.ed_count())
        throw ValidationError("scenario lists " + std::to_string(scen.ed_rates_mbps.size()) +
                              " generation rates for " + std::to_string(topo.ed_count()) +
                              " edge devices");
    for (int i = 0; i < topo.ed_count(); ++i)
        if (scen.ed_rates_mbps[i] < 0)
            throw ValidationError("negative generation rate at " +
                                  to_string(NodeId{topo.ed_layer(), i}));
    if (scen.rho < 0 || scen.rho > 1)
        throw ValidationError("rho out of range [0, 1]: " + std::to_string(scen.rho));
}

Scenario scaled_scenario(const Scenario& base, double t) {
    Scenario s = base;
    for (double& r : s.ed_rates_mbps) r *= t;
    return s;
}

std::vector<double> subtree_generation(const Topology& topo, const Scenario& scen) {
    std::vector<double> gen(topo.var_count(), 0.0);
    for (int v : topo.deep_first_order()) {
        const NodeId id = topo.node_of_var(v);
        if (id.layer == topo.ed_layer()) {
            gen[v] = scen.ed_rates_mbps[id.index];
        } else {
            for (int c : topo.child_vars(v)) gen[v] += gen[c];
        }
    }
    return gen;
}

double total_generation(const Scenario& scen) {
    double t = 0.0;
    for (double r : scen.ed_rates_mbps) t += r;
    return t;
}

}  // namespace mectree
