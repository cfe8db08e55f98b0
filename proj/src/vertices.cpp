#include "mectree/vertices.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace mectree {

namespace {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double result = 1.0;
    for (int i = 0; i < k; ++i) result = result * static_cast<double>(n - i) / (i + 1);
    return result;
}

bool near_existing(const std::vector<std::vector<double>>& accepted,
                   const std::vector<double>& p, double dist) {
    const double dist2 = dist * dist;
    for (const auto& q : accepted) {
        double d2 = 0.0;
        for (size_t i = 0; i < p.size(); ++i) {
            const double diff = p[i] - q[i];
            d2 += diff * diff;
            if (d2 > dist2) break;
        }
        if (d2 <= dist2) return true;
    }
    return false;
}

}  // namespace

EnumerationStats for_each_vertex(const LinearConstraintSet& cs, const EnumerationOptions& opts,
                                 const std::function<bool(const std::vector<double>&)>& visit) {
    const int d = cs.dimension();
    const int k = static_cast<int>(cs.rows.size());
    EnumerationStats stats;
    stats.subsets_total = binomial(k, d);
    if (d < 1 || k < d) return stats;

    std::vector<int> pick(d);
    for (int i = 0; i < d; ++i) pick[i] = i;

    Eigen::MatrixXd a(d, d);
    Eigen::VectorXd b(d);
    Eigen::FullPivLU<Eigen::MatrixXd> lu;
    std::vector<double> p(d);
    std::vector<std::vector<double>> accepted;

    bool more = true;
    while (more) {
        if (stats.subsets_examined >= opts.subset_cap) {
            stats.truncated = true;
            break;
        }
        ++stats.subsets_examined;

        for (int i = 0; i < d; ++i) {
            const auto& row = cs.rows[pick[i]];
            for (int j = 0; j < d; ++j) a(i, j) = row.coeffs[j];
            b(i) = row.bound;
        }
        lu.compute(a);
        if (lu.rank() == d) {
            ++stats.candidates_solved;
            const Eigen::VectorXd x = lu.solve(b);
            for (int i = 0; i < d; ++i) p[i] = x(i);
            bool feasible = true;
            for (const auto& row : cs.rows) {
                if (!row_satisfied(row, p, opts.feas_tol)) {
                    feasible = false;
                    break;
                }
            }
            if (feasible && !near_existing(accepted, p, opts.dedup_dist)) {
                accepted.push_back(p);
                ++stats.vertices_found;
                if (!visit(p)) break;
            }
        }

        // Advance to the next lexicographic subset.
        int i = d - 1;
        while (i >= 0 && pick[i] == k - d + i) --i;
        if (i < 0) {
            more = false;
        } else {
            ++pick[i];
            for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return stats;
}

std::vector<std::vector<double>> enumerate_vertices(const LinearConstraintSet& cs,
                                                    const EnumerationOptions& opts,
                                                    EnumerationStats* stats) {
    std::vector<std::vector<double>> vertices;
    EnumerationStats s = for_each_vertex(cs, opts, [&](const std::vector<double>& p) {
        vertices.push_back(p);
        return true;
    });
    if (stats) *stats = s;
    return vertices;
}

}  // namespace mectree
