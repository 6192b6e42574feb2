#include "quintic/linsolve.hpp"

#include "quintic/error.hpp"

namespace quintic {

void LinearSystem::add_row(std::vector<Rational> row, Rational b) {
    if (static_cast<int>(row.size()) != cols)
        throw StructureError("linear system row width mismatch");
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
}

LinearSolution solve_exact(LinearSystem sys) {
    const int m = static_cast<int>(sys.rows.size());
    const int n = sys.cols;
    std::vector<int> pivot_col;  // pivot column of row r, in order

    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int p = -1;
        for (int i = r; i < m; ++i) {
            if (!sys.rows[i][c].is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(sys.rows[p], sys.rows[r]);
        std::swap(sys.rhs[p], sys.rhs[r]);
        Rational inv = sys.rows[r][c].inverse();
        for (int j = c; j < n; ++j) sys.rows[r][j] *= inv;
        sys.rhs[r] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || sys.rows[i][c].is_zero()) continue;
            Rational f = sys.rows[i][c];
            for (int j = c; j < n; ++j) sys.rows[i][j] -= f * sys.rows[r][j];
            sys.rhs[i] -= f * sys.rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }

    LinearSolution sol;
    sol.rank = r;
    for (int i = r; i < m; ++i) {
        if (!sys.rhs[i].is_zero()) {
            sol.consistent = false;
            return sol;
        }
    }
    sol.consistent = true;

    std::vector<int> col_pivot_row(n, -1);
    for (int i = 0; i < r; ++i) col_pivot_row[pivot_col[static_cast<size_t>(i)]] = i;

    sol.particular.assign(static_cast<size_t>(n), Rational(0));
    for (int i = 0; i < r; ++i)
        sol.particular[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = sys.rhs[i];

    for (int c = 0; c < n; ++c) {
        if (col_pivot_row[c] >= 0) continue;
        sol.free_columns.push_back(c);
        std::vector<Rational> v(static_cast<size_t>(n), Rational(0));
        v[static_cast<size_t>(c)] = Rational(1);
        for (int i = 0; i < r; ++i)
            v[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = -sys.rows[i][c];
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

}  // namespace quintic
