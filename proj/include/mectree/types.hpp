#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mectree {

// Address of a node in the layered tree: layer 0 is the cloud center,
// layers 1..N are MEC tiers, layer N+1 holds the edge devices.
struct NodeId {
    int layer = 0;
    int index = 0;

    friend bool operator==(const NodeId&, const NodeId&) = default;
    friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

inline std::string to_string(const NodeId& id) {
    return "L" + std::to_string(id.layer) + "[" + std::to_string(id.index) + "]";
}

// Raised on malformed topologies, scenarios or config files. The message
// names the offending node or JSON path.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exhaustive search would exceed its evaluation budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, double required)
        : std::runtime_error(what), required_evaluations(required) {}

    double required_evaluations = 0;
};

}  // namespace mectree
