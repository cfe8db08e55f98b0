#include "mectree/constraints.hpp"

#include <algorithm>
#include <cassert>

namespace mectree {

std::string to_string(RowKind kind) {
    switch (kind) {
        case RowKind::BoxLower: return "box-lower";
        case RowKind::BoxUpper: return "box-upper";
        case RowKind::Compute: return "compute";
        case RowKind::CcCompute: return "cc-compute";
        case RowKind::Transmission: return "transmission";
    }
    return "?";
}

namespace {

// Marks every variable in the subtree rooted at v (inclusive).
void mark_subtree(const Topology& topo, int v, std::vector<char>& mask) {
    mask[v] = 1;
    for (int c : topo.child_vars(v)) mark_subtree(topo, c, mask);
}

}  // namespace

LinearConstraintSet assemble_constraints(const Topology& topo, const Scenario& scen) {
    validate_scenario(topo, scen);
    const int d = topo.var_count();
    const std::vector<double> gen = subtree_generation(topo, scen);

    LinearConstraintSet cs;
    cs.rho = scen.rho;
    cs.total_gen = total_generation(scen);
    cs.vars.resize(d);
    for (int v = 0; v < d; ++v) {
        cs.vars[v].id = topo.node_of_var(v);
        cs.vars[v].subtree_gen = gen[v];
        cs.vars[v].children = topo.child_vars(v);
    }

    auto subtree_mask = [&](int v) {
        std::vector<char> mask(d, 0);
        mark_subtree(topo, v, mask);
        return mask;
    };

    // Box rows: p_v >= 0, and subtree-processed <= subtree generation (the
    // p-space form of s_v <= 1).
    for (int v = 0; v < d; ++v) {
        ConstraintRow row;
        row.coeffs.assign(d, 0.0);
        row.coeffs[v] = -1.0;
        row.bound = 0.0;
        row.kind = RowKind::BoxLower;
        row.subject = topo.node_of_var(v);
        cs.rows.push_back(std::move(row));
    }
    for (int v = 0; v < d; ++v) {
        ConstraintRow row;
        row.coeffs.assign(d, 0.0);
        const auto mask = subtree_mask(v);
        for (int u = 0; u < d; ++u)
            if (mask[u]) row.coeffs[u] = 1.0;
        row.bound = gen[v];
        row.kind = RowKind::BoxUpper;
        row.subject = topo.node_of_var(v);
        cs.rows.push_back(std::move(row));
    }

    // Compute rows: raw processed at a node cannot exceed its capacity.
    for (int v = 0; v < d; ++v) {
        ConstraintRow row;
        row.coeffs.assign(d, 0.0);
        row.coeffs[v] = 1.0;
        row.bound = topo.compute_cap(v);
        row.kind = RowKind::Compute;
        row.subject = topo.node_of_var(v);
        cs.rows.push_back(std::move(row));
    }

    // CC row: residual raw reaching the CC, total_gen - sum(p), within theta_cc.
    {
        ConstraintRow row;
        row.coeffs.assign(d, -1.0);
        row.bound = topo.cc_compute_cap() - cs.total_gen;
        row.kind = RowKind::CcCompute;
        row.subject = NodeId{0, 0};
        cs.rows.push_back(std::move(row));
    }

    // Transmission rows: what a parent's children push up is the raw
    // generated under them minus (1-rho) times everything processed under
    // them, bounded by the parent's budget.
    for (const auto& parent : topo.parents()) {
        ConstraintRow row;
        row.coeffs.assign(d, 0.0);
        double gen_under = 0.0;
        for (int c : parent.child_vars) {
            gen_under += gen[c];
            const auto mask = subtree_mask(c);
            for (int u = 0; u < d; ++u)
                if (mask[u]) row.coeffs[u] = -(1.0 - scen.rho);
        }
        row.bound = parent.trans_mbps - gen_under;
        row.kind = RowKind::Transmission;
        row.subject = parent.id;
        cs.rows.push_back(std::move(row));
    }
    return cs;
}

std::vector<double> LinearConstraintSet::to_processed(const Assignment& s) const {
    const int d = dimension();
    assert(static_cast<int>(s.size()) == d);
    std::vector<double> p(d, 0.0), subtree(d, 0.0);
    // vars are sorted (layer asc, index asc); iterating backwards visits
    // children before parents.
    for (int v = d - 1; v >= 0; --v) {
        double below = 0.0;
        for (int c : vars[v].children) below += subtree[c];
        const double lambda = vars[v].subtree_gen - below;
        p[v] = s[v] * std::max(lambda, 0.0);
        subtree[v] = below + p[v];
    }
    return p;
}

Assignment LinearConstraintSet::to_assignment(const std::vector<double>& p) const {
    const int d = dimension();
    assert(static_cast<int>(p.size()) == d);
    Assignment s(d, 0.0);
    std::vector<double> subtree(d, 0.0);
    for (int v = d - 1; v >= 0; --v) {
        double below = 0.0;
        for (int c : vars[v].children) below += subtree[c];
        subtree[v] = below + p[v];
        const double lambda = vars[v].subtree_gen - below;
        s[v] = lambda > 0.0 ? std::clamp(p[v] / lambda, 0.0, 1.0) : 0.0;
    }
    return s;
}

std::pair<int, int> LinearConstraintSet::row_counts() const {
    int kc = 0, kt = 0;
    for (const auto& row : rows) {
        if (row.kind == RowKind::Compute || row.kind == RowKind::CcCompute) ++kc;
        if (row.kind == RowKind::Transmission) ++kt;
    }
    return {kc, kt};
}

bool row_satisfied(const ConstraintRow& row, const std::vector<double>& p, double tol) {
    double lhs = 0.0;
    for (size_t i = 0; i < row.coeffs.size(); ++i) lhs += row.coeffs[i] * p[i];
    return lhs <= row.bound * (1.0 + tol) + tol;
}

FeasibilityReport check_feasible_point(const LinearConstraintSet& cs,
                                       const std::vector<double>& p, double tol) {
    FeasibilityReport report;
    for (int r = 0; r < static_cast<int>(cs.rows.size()); ++r) {
        const auto& row = cs.rows[r];
        double lhs = 0.0;
        for (size_t i = 0; i < row.coeffs.size(); ++i) lhs += row.coeffs[i] * p[i];
        if (lhs > row.bound * (1.0 + tol) + tol) {
            report.feasible = false;
            report.violations.push_back({r, lhs, row.bound, row.bound - lhs});
        }
    }
    return report;
}

FeasibilityReport check_feasible(const LinearConstraintSet& cs, const Assignment& s, double tol) {
    return check_feasible_point(cs, cs.to_processed(s), tol);
}

ConstraintCount constraint_count(const Topology& topo) {
    ConstraintCount count;
    count.compute = topo.var_count() + 1;
    count.transmission = static_cast<int>(topo.parents().size());
    count.total = count.compute + count.transmission;
    return count;
}

}  // namespace mectree
