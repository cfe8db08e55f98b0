#pragma once

#include <functional>
#include <vector>

#include "mectree/constraints.hpp"

namespace mectree {

struct EnumerationOptions {
    double feas_tol = 1e-9;
    double dedup_dist = 1e-8;        // Euclidean distance below which points merge
    long long subset_cap = 2'000'000;  // max row subsets examined before truncating
};

struct EnumerationStats {
    double subsets_total = 0;        // C(rows, D); double because it can be huge
    long long subsets_examined = 0;
    long long candidates_solved = 0;  // nonsingular equality systems
    long long vertices_found = 0;     // feasible, deduplicated
    bool truncated = false;
};

// Visits every basic feasible point of the row system: each D-subset of rows
// with a nonsingular coefficient matrix is solved for equality, kept when the
// point satisfies all rows, and deduplicated. Subsets are visited in
// lexicographic row-index order, so the stream is deterministic. The visitor
// returns false to stop early.
EnumerationStats for_each_vertex(const LinearConstraintSet& cs, const EnumerationOptions& opts,
                                 const std::function<bool(const std::vector<double>&)>& visit);

std::vector<std::vector<double>> enumerate_vertices(const LinearConstraintSet& cs,
                                                    const EnumerationOptions& opts = {},
                                                    EnumerationStats* stats = nullptr);

}  // namespace mectree
