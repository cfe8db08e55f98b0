#pragma once

#include <string>
#include <vector>

#include "mectree/types.hpp"

namespace mectree {

// Per-node resource bounds. compute_mbps is the most raw data the node can
// process per second; trans_mbps is the transmission budget the node divides
// among its children (zero for edge devices, which have no children).
struct NodeSpec {
    double compute_mbps = 0.0;
    double trans_mbps = 0.0;
};

// Unvalidated description of a layered tree, top-down: layers[0] is the
// cloud center, the last layer holds the edge devices. Parents are named by
// index into the layer above; parent_layer exists so that malformed wiring
// (layer-skipping edges) can be expressed and rejected.
struct TopologySpec {
    struct Node {
        double compute_mbps = 0.0;
        double trans_mbps = 0.0;
        int parent = -1;
        int parent_layer = kAdjacent;  // defaults to own layer - 1
    };
    struct Layer {
        std::string name;
        std::vector<Node> nodes;
    };

    static constexpr int kAdjacent = -2;

    std::vector<Layer> layers;
};

// Validated layered tree. Immutable after construction; build via
// build_topology(). Non-CC nodes carry a dense variable index (the task-split
// coordinate order used throughout), sorted by (layer, index) ascending.
class Topology {
public:
    struct Node {
        NodeSpec spec;
        int parent = -1;              // index within the layer above
        std::vector<int> children;    // indices within the layer below
    };

    // A node that allocates transmission capacity downward: the CC plus every
    // MEC node with at least one child. var is -1 for the CC.
    struct Parent {
        NodeId id;
        int var = -1;
        double trans_mbps = 0.0;
        std::vector<int> child_vars;
    };

    int mec_layer_count() const { return static_cast<int>(layers_.size()) - 2; }  // N
    int layer_count() const { return static_cast<int>(layers_.size()); }          // N + 2
    int layer_size(int layer) const { return static_cast<int>(layers_[layer].size()); }
    int ed_layer() const { return layer_count() - 1; }
    int ed_count() const { return layer_size(ed_layer()); }

    const Node& node(const NodeId& id) const { return layers_[id.layer][id.index]; }
    const NodeSpec& spec(const NodeId& id) const { return node(id).spec; }
    const std::string& layer_name(int layer) const { return layer_names_[layer]; }

    // Task-split variable indexing over non-CC nodes.
    int var_count() const { return static_cast<int>(var_nodes_.size()); }
    int var_of(const NodeId& id) const { return var_index_[id.layer][id.index]; }
    const NodeId& node_of_var(int v) const { return var_nodes_[v]; }
    int parent_var(int v) const { return parent_var_[v]; }  // -1 when parent is the CC
    const std::vector<int>& child_vars(int v) const { return child_vars_[v]; }
    const std::vector<int>& cc_child_vars() const { return cc_child_vars_; }
    double compute_cap(int v) const { return spec(node_of_var(v)).compute_mbps; }
    double cc_compute_cap() const { return layers_[0][0].spec.compute_mbps; }
    double cc_trans_budget() const { return layers_[0][0].spec.trans_mbps; }

    // Parents in (layer, index) ascending order; the CC comes first.
    const std::vector<Parent>& parents() const { return parents_; }

    // Variable positions ordered deepest layer first (EDs first). Every
    // node's children precede it, which is the order flow recursions use.
    const std::vector<int>& deep_first_order() const { return deep_first_; }

    TopologySpec to_spec() const;

    friend Topology build_topology(const TopologySpec& raw);

private:
    std::vector<std::vector<Node>> layers_;
    std::vector<std::string> layer_names_;
    std::vector<NodeId> var_nodes_;
    std::vector<std::vector<int>> var_index_;
    std::vector<int> parent_var_;
    std::vector<std::vector<int>> child_vars_;
    std::vector<int> cc_child_vars_;
    std::vector<Parent> parents_;
    std::vector<int> deep_first_;
};

// Validates the raw spec and derives child sets and variable indexing.
// Rejects orphan nodes, layer-skipping edges, multiple CCs, empty layers and
// negative capacities; messages name the offending node.
Topology build_topology(const TopologySpec& raw);

// Data-generation rates per edge device plus the processed-data compression
// ratio rho in [0, 1].
struct Scenario {
    std::vector<double> ed_rates_mbps;
    double rho = 0.0;
};

// Checks rate count and ranges against the topology.
void validate_scenario(const Topology& topo, const Scenario& scen);

// Scenario with every generation rate multiplied by t.
Scenario scaled_scenario(const Scenario& base, double t);

// Total generation within each non-CC node's subtree, variable-indexed.
std::vector<double> subtree_generation(const Topology& topo, const Scenario& scen);

// Sum of all generation rates.
double total_generation(const Scenario& scen);

}  // namespace mectree
