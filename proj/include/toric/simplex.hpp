#pragma once

#include <vector>

#include "toric/util.hpp"

namespace toric {

// Exact-rational primal simplex for min c.x s.t. Ax = b, x >= 0.
// Bland's rule, two phases. Small instances only (cell location and
// hull membership); everything stays in Q.
struct SimplexResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    std::vector<Rat> x;
    Rat objective;
    bool degenerate_basis = false;   // a basic variable is zero at the optimum
    bool alternative_optima = false; // a nonbasic column has zero reduced cost
};

SimplexResult simplex_min(const std::vector<std::vector<Rat>>& a,
                          const std::vector<Rat>& b,
                          const std::vector<Rat>& c);

}  // namespace toric
