#include <turan/linear_program.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace turan {

namespace {

constexpr double kPivotEps = 1e-11;
constexpr int kMaxPivots = 100000;

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t columns)
        : rows_(rows), columns_(columns), cells_((rows + 1) * (columns + 1), 0.0), basis_(rows, 0)
    {
    }

    double &at(std::size_t r, std::size_t c) { return cells_[r * (columns_ + 1) + c]; }
    double &rhs(std::size_t r) { return at(r, columns_); }
    // Row `rows_` holds reduced costs; its rhs cell holds the objective value.
    double &cost(std::size_t c) { return at(rows_, c); }

    std::size_t rows() const { return rows_; }
    std::size_t columns() const { return columns_; }
    std::vector<std::size_t> &basis() { return basis_; }

    void pivot(std::size_t r, std::size_t c)
    {
        double p = at(r, c);
        for (std::size_t j = 0; j <= columns_; ++j) at(r, j) /= p;
        for (std::size_t i = 0; i <= rows_; ++i) {
            if (i == r) continue;
            double f = at(i, c);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= columns_; ++j) at(i, j) -= f * at(r, j);
        }
        basis_[r] = c;
    }

    /// Loads reduced costs for maximising `costs` with the current basis.
    void set_costs(const std::vector<double> &costs)
    {
        for (std::size_t j = 0; j <= columns_; ++j) {
            double v = j < columns_ ? -costs[j] : 0.0;
            for (std::size_t i = 0; i < rows_; ++i) v += costs[basis_[i]] * at(i, j);
            cost(j) = v;
        }
    }

    /// Runs simplex iterations; columns flagged in `blocked` never enter.
    LpSolution::Status optimise(const std::vector<bool> &blocked)
    {
        for (int iter = 0; iter < kMaxPivots; ++iter) {
            std::size_t enter = columns_;
            for (std::size_t j = 0; j < columns_; ++j)
                if (!blocked[j] && cost(j) < -kPivotEps) {
                    enter = j;
                    break;
                }
            if (enter == columns_) return LpSolution::Status::optimal;

            std::size_t leave = rows_;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < rows_; ++i) {
                double a = at(i, enter);
                if (a <= kPivotEps) continue;
                double ratio = rhs(i) / a;
                if (ratio < best_ratio - 1e-14 ||
                    (std::abs(ratio - best_ratio) <= 1e-14 && leave < rows_ && basis_[i] < basis_[leave])) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
            if (leave == rows_) return LpSolution::Status::unbounded;
            pivot(leave, enter);
        }
        return LpSolution::Status::iteration_limit;
    }

    void drop_row(std::size_t r)
    {
        std::vector<double> kept;
        kept.reserve(rows_ * (columns_ + 1));
        for (std::size_t i = 0; i <= rows_; ++i)
            if (i != r)
                for (std::size_t j = 0; j <= columns_; ++j) kept.push_back(at(i, j));
        cells_ = std::move(kept);
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        --rows_;
    }

private:
    std::size_t rows_;
    std::size_t columns_;
    std::vector<double> cells_;
    std::vector<std::size_t> basis_;
};

} // namespace

LpSolution solve_lp(const LinearProgram &lp)
{
    std::size_t n = lp.variables;
    if (lp.objective.size() != n) throw std::invalid_argument("objective length differs from variable count");
    for (const auto &row : lp.rows)
        if (row.coefficients.size() != n) throw std::invalid_argument("constraint length differs from variable count");

    // Column layout: structural | one slack or surplus per inequality |
    // one artificial per row that needs one.
    std::size_t m = lp.rows.size();
    std::size_t slacks = 0, artificials = 0;
    std::vector<double> sign(m, 1.0);
    std::vector<bool> needs_artificial(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        const auto &row = lp.rows[i];
        if (row.rhs < 0.0) sign[i] = -1.0;
        if (!row.equality) ++slacks;
        // Equalities and flipped inequalities (>= after flipping) start
        // without a feasible basic variable.
        if (row.equality || sign[i] < 0.0) {
            needs_artificial[i] = true;
            ++artificials;
        }
    }

    std::size_t columns = n + slacks + artificials;
    Tableau t(m, columns);
    std::size_t slack_col = n, art_col = n + slacks;
    std::vector<bool> is_artificial(columns, false);
    for (std::size_t i = 0; i < m; ++i) {
        const auto &row = lp.rows[i];
        for (std::size_t j = 0; j < n; ++j) t.at(i, j) = sign[i] * row.coefficients[j];
        t.rhs(i) = sign[i] * row.rhs;
        if (!row.equality) {
            t.at(i, slack_col) = sign[i];
            if (!needs_artificial[i]) t.basis()[i] = slack_col;
            ++slack_col;
        }
        if (needs_artificial[i]) {
            t.at(i, art_col) = 1.0;
            is_artificial[art_col] = true;
            t.basis()[i] = art_col;
            ++art_col;
        }
    }

    std::vector<bool> blocked(columns, false);
    if (artificials > 0) {
        std::vector<double> phase_one(columns, 0.0);
        for (std::size_t j = 0; j < columns; ++j)
            if (is_artificial[j]) phase_one[j] = -1.0;
        t.set_costs(phase_one);
        auto status = t.optimise(blocked);
        if (status != LpSolution::Status::optimal) return {status, {}, 0.0};
        if (t.cost(columns) < -1e-9) return {LpSolution::Status::infeasible, {}, 0.0};

        // Drive remaining artificials out of the basis; rows where that is
        // impossible are redundant.
        for (std::size_t i = 0; i < t.rows();) {
            if (!is_artificial[t.basis()[i]]) {
                ++i;
                continue;
            }
            std::size_t enter = columns;
            for (std::size_t j = 0; j < columns; ++j)
                if (!is_artificial[j] && std::abs(t.at(i, j)) > kPivotEps) {
                    enter = j;
                    break;
                }
            if (enter == columns) {
                t.drop_row(i);
            } else {
                t.pivot(i, enter);
                ++i;
            }
        }
        for (std::size_t j = 0; j < columns; ++j) blocked[j] = is_artificial[j];
    }

    std::vector<double> costs(columns, 0.0);
    for (std::size_t j = 0; j < n; ++j) costs[j] = lp.objective[j];
    t.set_costs(costs);
    auto status = t.optimise(blocked);
    if (status != LpSolution::Status::optimal) return {status, {}, 0.0};

    LpSolution out;
    out.status = LpSolution::Status::optimal;
    out.z.assign(n, 0.0);
    for (std::size_t i = 0; i < t.rows(); ++i)
        if (t.basis()[i] < n) out.z[t.basis()[i]] = std::max(0.0, t.rhs(i));
    out.value = 0.0;
    for (std::size_t j = 0; j < n; ++j) out.value += lp.objective[j] * out.z[j];
    return out;
}

} // namespace turan
