#ifndef QUINTIC_LINSOLVE_HPP
#define QUINTIC_LINSOLVE_HPP

/**
 * @file linsolve.hpp
 * @brief Exact dense linear solving over the rationals.
 */

#include <vector>

#include "quintic/rational.hpp"

namespace quintic {

/// A * x = b with exact rational entries.
struct LinearSystem {
    int cols = 0;
    std::vector<std::vector<Rational>> rows;  // each of size cols
    std::vector<Rational> rhs;                // one entry per row

    void add_row(std::vector<Rational> row, Rational b);
};

struct LinearSolution {
    bool consistent = false;
    int rank = 0;
    std::vector<Rational> particular;               // free variables set to zero
    std::vector<std::vector<Rational>> nullspace;   // basis, one vector per free column
    std::vector<int> free_columns;                  // non-pivot columns, ascending
    int nullity() const { return static_cast<int>(nullspace.size()); }
};

/// Reduced row echelon form with deterministic first-nonzero pivoting.
LinearSolution solve_exact(LinearSystem system);

}  // namespace quintic

#endif
