#include "support.hpp"

#include <turan/lagrangian.hpp>
#include <turan/linear_program.hpp>
#include <turan/simplex.hpp>

#include <doctest.h>

#include <cmath>

using namespace turan;

TEST_CASE("lagrange polynomial on small graphs")
{
    Hypergraph edge(3, 3, {{1, 2, 3}});
    CHECK(lagrange_poly(edge, Weighting::over_vertices({1.0 / 3, 1.0 / 3, 1.0 / 3})) == doctest::Approx(6.0 / 27));
    Hypergraph k3(2, 3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(lagrange_poly(k3, Weighting::over_vertices({0.5, 0.5, 0.0})) == doctest::Approx(0.5));
}

TEST_CASE("gradient agrees with central differences")
{
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = testing::random_graph(3, 6, 0.5, rng);
        auto x = random_simplex_point(6, rng);
        auto grad = lagrange_grad(g, x);
        for (std::size_t i = 0; i < x.size(); ++i) {
            auto up = x, down = x;
            up[i] += 1e-6;
            down[i] -= 1e-6;
            double fd = (lagrange_poly(g, up) - lagrange_poly(g, down)) / 2e-6;
            CHECK(grad[i] == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("Euler identity for the homogeneous polynomial")
{
    Rng rng(6);
    for (int k = 2; k <= 4; ++k) {
        auto g = testing::random_graph(k, 6, 0.5, rng);
        auto x = random_simplex_point(6, rng);
        auto grad = lagrange_grad(g, x);
        double dot = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * grad[i];
        CHECK(dot == doctest::Approx(k * lagrange_poly(g, x)).epsilon(1e-12));
    }
}

TEST_CASE("clique Lagrangians")
{
    for (int r = 2; r <= 7; ++r) CHECK(lagrangian(complete_hypergraph(2, r)).value == doctest::Approx(1.0 - 1.0 / r));
    // 3! C(n,3) / n^3 for K^3_n.
    for (int n = 3; n <= 6; ++n)
        CHECK(lagrangian(complete_hypergraph(3, n)).value ==
              doctest::Approx(static_cast<double>((n - 1) * (n - 2)) / (n * n)));
}

TEST_CASE("maximiser is a KKT point and dominates the oracle")
{
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = testing::random_graph(3, 5, 0.5, rng);
        SolverConfig config;
        config.seed = static_cast<std::uint64_t>(trial);
        auto r = lagrangian(g, config);
        CHECK(r.value == doctest::Approx(lagrange_poly(g, r.maximiser)).epsilon(1e-12));
        CHECK(r.residual < 1e-8);
        auto oracle = lagrangian_grid_oracle(g, 10);
        CHECK(r.value >= oracle.value - 1e-9);
        REQUIRE(r.oracle_value.has_value());
    }
}

TEST_CASE("edgeless and single-vertex graphs")
{
    CHECK(lagrangian(Hypergraph(3, 4, {})).value == 0.0);
    CHECK(lagrangian(Hypergraph(3, 0, {})).value == 0.0);
}

TEST_CASE("lagrangian is deterministic for a fixed seed")
{
    SolverConfig config;
    config.seed = 99;
    config.oracle_cap = 0;
    auto g = tight_cycle(7);
    auto a = lagrangian(g, config), b = lagrangian(g, config);
    CHECK(a.value == b.value);
    CHECK(a.maximiser == b.maximiser);
}

TEST_CASE("linear program solver")
{
    // max x + y s.t. x + 2y <= 4, 3x + y <= 6.
    LinearProgram lp;
    lp.variables = 2;
    lp.objective = {1.0, 1.0};
    lp.rows = {{{1.0, 2.0}, 4.0, false}, {{3.0, 1.0}, 6.0, false}};
    auto s = solve_lp(lp);
    REQUIRE(s.status == LpSolution::Status::optimal);
    CHECK(s.value == doctest::Approx(2.8));
    lp.rows.push_back({{1.0, 1.0}, 5.0, true});
    CHECK(solve_lp(lp).status == LpSolution::Status::infeasible);
}
