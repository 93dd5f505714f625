#pragma once

#include <array>
#include <cmath>
#include <vector>

namespace sdcap {

// Maximize c.x subject to A x <= b, x >= 0, by enumerating basic feasible
// points: every vertex of the polytope solves some choice of n active
// constraints, and with n = 4 variables and ~14 rows the subset count is
// tiny. The feasible set must be bounded and contain the origin.
struct VertexLp {
    std::vector<std::array<double, 4>> rows; // coefficient rows of A
    std::vector<double> rhs;                 // b

    void add_row(const std::array<double, 4>& coeff, double bound) {
        rows.push_back(coeff);
        rhs.push_back(bound);
    }

    double maximize(const std::array<double, 4>& c, std::array<double, 4>* argmax = nullptr) const {
        const int n = 4;
        const int m = (int)rows.size();
        const int total = m + n; // rows plus the nonnegativity facets

        double scale = 1.0;
        for (double v : rhs) scale = std::max(scale, std::fabs(v));
        const double feas_tol = 1e-9 * scale;

        double best = 0.0; // origin is feasible
        std::array<double, 4> best_x{0.0, 0.0, 0.0, 0.0};

        std::array<int, 4> pick = {0, 1, 2, 3};
        std::array<std::array<double, 5>, 4> mat;
        std::array<double, 4> x;
        while (true) {
            if (solve_active(pick, mat, x) && feasible(x, feas_tol)) {
                const double val = c[0] * x[0] + c[1] * x[1] + c[2] * x[2] + c[3] * x[3];
                if (val > best) {
                    best = val;
                    best_x = x;
                }
            }
            int i = n - 1;
            while (i >= 0 && pick[i] == total - n + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (argmax) *argmax = best_x;
        return best;
    }

  private:
    // Constraint index < m selects a row of A, otherwise the facet x_i = 0.
    bool solve_active(const std::array<int, 4>& pick, std::array<std::array<double, 5>, 4>& mat,
                      std::array<double, 4>& x) const {
        const int n = 4;
        const int m = (int)rows.size();
        for (int r = 0; r < n; ++r) {
            const int idx = pick[r];
            for (int j = 0; j < n; ++j) mat[r][j] = idx < m ? rows[idx][j] : 0.0;
            if (idx < m) {
                mat[r][n] = rhs[idx];
            } else {
                mat[r][idx - m] = 1.0;
                mat[r][n] = 0.0;
            }
        }
        for (int col = 0; col < n; ++col) { // partial pivoting
            int piv = col;
            for (int r = col + 1; r < n; ++r)
                if (std::fabs(mat[r][col]) > std::fabs(mat[piv][col])) piv = r;
            if (std::fabs(mat[piv][col]) < 1e-12) return false;
            std::swap(mat[col], mat[piv]);
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                const double f = mat[r][col] / mat[col][col];
                if (f == 0.0) continue;
                for (int j = col; j <= n; ++j) mat[r][j] -= f * mat[col][j];
            }
        }
        for (int i = 0; i < n; ++i) x[i] = mat[i][n] / mat[i][i];
        return true;
    }

    bool feasible(const std::array<double, 4>& x, double tol) const {
        for (int i = 0; i < 4; ++i)
            if (x[i] < -tol) return false;
        for (size_t r = 0; r < rows.size(); ++r) {
            const double lhs = rows[r][0] * x[0] + rows[r][1] * x[1] + rows[r][2] * x[2] + rows[r][3] * x[3];
            if (lhs > rhs[r] + tol) return false;
        }
        return true;
    }
};

} // namespace sdcap
