#pragma once

#include <stdexcept>
#include <vector>

namespace barrier_cover {

// Primal simplex for  max c'x  s.t.  Ax <= b, x >= 0  with b >= 0, so the
// slack basis is feasible from the start. Bland's rule, which cannot cycle.
// Dense tableau; meant for the small models this library builds.
class SimplexSolver {
public:
    struct Result {
        double objective = 0;
        std::vector<double> x;
    };

    static Result maximize(const std::vector<std::vector<double>>& a,
                           const std::vector<double>& b,
                           const std::vector<double>& c) {
        const int m = static_cast<int>(b.size());
        const int n = static_cast<int>(c.size());
        for (double bi : b)
            if (bi < 0) throw std::invalid_argument("simplex: negative rhs");

        // Tableau rows 0..m-1 are constraints, row m is the objective.
        // Columns 0..n-1 structural, n..n+m-1 slacks, last column rhs.
        const int cols = n + m + 1;
        std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0));
        std::vector<int> basis(m);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
            t[i][n + i] = 1;
            t[i][cols - 1] = b[i];
            basis[i] = n + i;
        }
        for (int j = 0; j < n; ++j) t[m][j] = -c[j];

        constexpr double tol = 1e-9;
        for (;;) {
            int pivot_col = -1;
            for (int j = 0; j < n + m; ++j) {
                if (t[m][j] < -tol) {
                    pivot_col = j;  // Bland: smallest improving index
                    break;
                }
            }
            if (pivot_col < 0) break;

            int pivot_row = -1;
            double best_ratio = 0;
            for (int i = 0; i < m; ++i) {
                if (t[i][pivot_col] <= tol) continue;
                const double ratio = t[i][cols - 1] / t[i][pivot_col];
                if (pivot_row < 0 || ratio < best_ratio - tol ||
                    (ratio < best_ratio + tol && basis[i] < basis[pivot_row])) {
                    pivot_row = i;
                    best_ratio = ratio;
                }
            }
            if (pivot_row < 0) throw std::runtime_error("simplex: unbounded");

            const double pv = t[pivot_row][pivot_col];
            for (int j = 0; j < cols; ++j) t[pivot_row][j] /= pv;
            for (int i = 0; i <= m; ++i) {
                if (i == pivot_row) continue;
                const double f = t[i][pivot_col];
                if (f == 0) continue;
                for (int j = 0; j < cols; ++j) t[i][j] -= f * t[pivot_row][j];
            }
            basis[pivot_row] = pivot_col;
        }

        Result res;
        res.x.assign(n, 0);
        for (int i = 0; i < m; ++i)
            if (basis[i] < n) res.x[basis[i]] = t[i][cols - 1];
        res.objective = t[m][cols - 1];
        return res;
    }
};

}  // namespace barrier_cover
