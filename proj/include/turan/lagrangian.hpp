#pragma once

#include <turan/hypergraph.hpp>
#include <turan/polynomial.hpp>
#include <turan/weighting.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace turan {

enum class SolverMethod { multistart_gradient, grid, support_enum };

std::string_view to_string(SolverMethod method);

struct SolverConfig {
    /// Random restarts, in addition to the uniform point and the uniform
    /// points on each edge (or triple) support.
    int starts = 200;
    std::uint64_t seed = 0x7572616e;
    double tolerance = 1e-9;
    /// Cross-check against the grid oracle when the dimension is at most this.
    int oracle_cap = 6;
    int oracle_resolution = 12;
    /// Iterations for the short screening ascent run from every start.
    int screening_iterations = 400;
    /// Number of best screened candidates ascended to convergence.
    int polish_candidates = 6;
    int max_iterations = 50000;
    /// Convergence threshold on the simplex-projected gradient step.
    double gradient_tolerance = 1e-10;
    unsigned threads = 0;
};

struct LagrangianReport {
    double value = 0.0;
    Weighting maximiser;
    SolverMethod method = SolverMethod::multistart_gradient;
    long iterations = 0;
    /// Largest KKT violation at the maximiser.
    double residual = 0.0;
    /// Grid oracle value when the cross-check ran.
    std::optional<double> oracle_value;
    int oracle_resolution = 0;
};

/// Weight vector of a vertex weighting, indexed 0..n-1; the labels must be
/// exactly 1..n.
std::vector<double> vertex_weights(const Hypergraph &graph, const Weighting &x);

/// k! * sum over edges of the product of vertex weights.
double lagrange_poly(const Hypergraph &graph, const Weighting &x);
double lagrange_poly(const Hypergraph &graph, std::span<const double> x);

std::vector<double> lagrange_grad(const Hypergraph &graph, const Weighting &x);
std::vector<double> lagrange_grad(const Hypergraph &graph, std::span<const double> x);

/// The Lagrange polynomial as a monomial list over indices 0..n-1.
HomogeneousPolynomial lagrange_polynomial(const Hypergraph &graph);

/// Maximum of the Lagrange polynomial over the simplex.
LagrangianReport lagrangian(const Hypergraph &graph, const SolverConfig &config = {});

struct GridOracleResult {
    double value = 0.0;
    /// Argmax as integer counts summing to the resolution.
    std::vector<int> counts;
    std::uint64_t points = 0;
};

inline constexpr std::uint64_t kDefaultGridBudget = 20'000'000;

/// Exact maximum over all simplex points with denominator `resolution`.
/// Throws std::length_error when the lattice exceeds `budget` points.
GridOracleResult lagrangian_grid_oracle(const Hypergraph &graph, int resolution,
                                        std::uint64_t budget = kDefaultGridBudget);

// Simplex maximisation of a polynomial with non-negative coefficients,
// shared with the palette solver.

struct SimplexMaximum {
    std::vector<double> x;
    double value = 0.0;
    long iterations = 0;
    double residual = 0.0;
};

/// Largest KKT violation of `x` as a maximiser of `poly` on the simplex.
double kkt_residual(const HomogeneousPolynomial &poly, std::span<const double> x);

/// Projected gradient ascent with backtracking from one start point.
SimplexMaximum ascend_on_simplex(const HomogeneousPolynomial &poly, std::vector<double> start, int max_iterations,
                                 double gradient_tolerance);

/// Multistart ascent: `seeded_starts` plus config.starts random points. Each
/// start gets a short screening run; the best candidates are polished. The
/// reduction is by value with ties broken by the lexicographically smallest
/// maximiser rounded to 1e-9, so the result is independent of scheduling.
SimplexMaximum maximize_on_simplex(const HomogeneousPolynomial &poly, std::vector<std::vector<double>> seeded_starts,
                                   const SolverConfig &config);

} // namespace turan
