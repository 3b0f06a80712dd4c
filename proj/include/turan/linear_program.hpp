#pragma once

#include <cstddef>
#include <vector>

namespace turan {

/// maximize objective . z  subject to  rows,  z >= 0.
struct LinearProgram {
    struct Row {
        std::vector<double> coefficients;
        double rhs = 0.0;
        bool equality = false; // otherwise coefficients . z <= rhs
    };

    std::size_t variables = 0;
    std::vector<double> objective;
    std::vector<Row> rows;
};

struct LpSolution {
    enum class Status { optimal, infeasible, unbounded, iteration_limit };
    Status status = Status::infeasible;
    std::vector<double> z;
    double value = 0.0;
};

/// Dense two-phase simplex with Bland's rule. Meant for the few dozen
/// variables and few hundred rows of the max-min refinement step.
LpSolution solve_lp(const LinearProgram &lp);

} // namespace turan
