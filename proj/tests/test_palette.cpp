#include "support.hpp"

#include <turan/lagrangian.hpp>
#include <turan/palette_lagrangian.hpp>
#include <turan/simplex.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace turan;

namespace {

// Direct definitions over the dense colour indices.
double degree_direct(const Palette &p, int a, const std::vector<double> &x)
{
    double best = INFINITY;
    for (int pos = 0; pos < 3; ++pos) {
        double s = 0.0;
        for (const auto &t : p.dense_triples()) {
            if (t[static_cast<std::size_t>(pos)] != a) continue;
            double prod = 1.0;
            for (int o = 0; o < 3; ++o)
                if (o != pos) prod *= x[static_cast<std::size_t>(t[static_cast<std::size_t>(o)])];
            s += prod;
        }
        best = std::min(best, s);
    }
    return best;
}

double codegree_direct(const Palette &p, int a, int b, const std::vector<double> &x)
{
    double best = INFINITY;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            int k = 3 - i - j;
            double s = 0.0;
            for (const auto &t : p.dense_triples())
                if (t[static_cast<std::size_t>(i)] == a && t[static_cast<std::size_t>(j)] == b)
                    s += x[static_cast<std::size_t>(t[static_cast<std::size_t>(k)])];
            best = std::min(best, s);
        }
    return best;
}

} // namespace

TEST_CASE("palette evaluators match their definitions")
{
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = testing::random_palette(4, 20, rng);
        auto x = random_simplex_point(p.colour_count(), rng);
        double vvv = 0.0;
        for (const auto &t : p.dense_triples())
            vvv += x[static_cast<std::size_t>(t[0])] * x[static_cast<std::size_t>(t[1])] *
                   x[static_cast<std::size_t>(t[2])];
        CHECK(lambda_vvv(p, x) == doctest::Approx(vvv).epsilon(1e-14));
        int q = static_cast<int>(p.colour_count());
        double ev = INFINITY, ee = INFINITY;
        for (int a = 0; a < q; ++a) {
            CHECK(degree_lagrangian(p, a, x) == doctest::Approx(degree_direct(p, a, x)).epsilon(1e-14));
            ev = std::min(ev, degree_direct(p, a, x));
            for (int b = 0; b < q; ++b) {
                CHECK(codegree_lagrangian(p, a, b, x) == doctest::Approx(codegree_direct(p, a, b, x)).epsilon(1e-14));
                ee = std::min(ee, codegree_direct(p, a, b, x));
            }
        }
        CHECK(lambda_ev(p, x) == doctest::Approx(ev).epsilon(1e-14));
        CHECK(lambda_ee(p, x) == doctest::Approx(ee).epsilon(1e-14));
    }
}

TEST_CASE("colours of zero weight are skipped by the minima")
{
    Palette p({{0, 0, 0}, {1, 1, 1}});
    Weighting x({0, 1}, {1.0, 0.0});
    CHECK(lambda_ev(p, x) == doctest::Approx(1.0));
    CHECK(lambda_ee(p, x) == doctest::Approx(1.0));
}

TEST_CASE("build_pt takes the first t permutations")
{
    Hypergraph edge(3, 3, {{1, 2, 3}});
    CHECK(build_pt(edge, 1).triples() == std::vector<ColourTriple>{{1, 2, 3}});
    CHECK(build_pt(edge, 2).triples() == std::vector<ColourTriple>{{1, 2, 3}, {1, 3, 2}});
    CHECK(build_pt(edge, 6).size() == 6);
    CHECK_THROWS(build_pt(edge, 0));
    CHECK_THROWS(build_pt(edge, 7));
    CHECK_THROWS(build_pt(complete_hypergraph(2, 3), 1));
}

TEST_CASE("p_t scales the Lagrange polynomial")
{
    Rng rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = testing::random_graph(3, 6, 0.5, rng);
        for (int t = 1; t <= 6; ++t) {
            auto p = build_pt(g, t);
            std::vector<double> xv = random_simplex_point(6, rng);
            std::vector<double> xc(p.colour_count());
            for (std::size_t i = 0; i < xc.size(); ++i) xc[i] = xv[static_cast<std::size_t>(p.colours()[i] - 1)];
            CHECK(lambda_vvv(p, xc) == doctest::Approx(t / 6.0 * lagrange_poly(g, xv)).epsilon(1e-12));
        }
    }
}

TEST_CASE("known palette Lagrangians")
{
    Palette mono({{1, 1, 1}});
    for (auto star : {StarMode::vvv, StarMode::ev, StarMode::ee})
        CHECK(palette_lagrangian(mono, star).value == doctest::Approx(1.0));

    auto p6 = build_pt(Hypergraph(3, 3, {{1, 2, 3}}), 6);
    CHECK(palette_lagrangian(p6, StarMode::vvv).value == doctest::Approx(2.0 / 9));
    CHECK(palette_lagrangian(p6, StarMode::ev).value == doctest::Approx(2.0 / 9));
    // The diagonal codegree (a, a) is empty for this palette.
    CHECK(palette_lagrangian(p6, StarMode::ee).value == doctest::Approx(0.0));
    CHECK(codegree_lagrangian(p6, 1, 2, Weighting::uniform({1, 2, 3})) == doctest::Approx(1.0 / 3));

    CHECK(palette_lagrangian(Palette{}, StarMode::vvv).value == 0.0);
}

TEST_CASE("palette solver dominates the grid oracle")
{
    Rng rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        auto p = testing::random_palette(3, 10, rng);
        for (auto star : {StarMode::vvv, StarMode::ev, StarMode::ee}) {
            PaletteSolverConfig config;
            config.ascent.seed = static_cast<std::uint64_t>(trial);
            auto r = palette_lagrangian(p, star, config);
            auto oracle = palette_grid_oracle(p, star, 12);
            CHECK(r.value >= oracle.value - 1e-9);
            CHECK(r.value == doctest::Approx(lambda_star(p, star, r.maximiser)).epsilon(1e-10));
        }
    }
}

TEST_CASE("chain of palette Lagrangians")
{
    Rng rng(24);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = testing::random_palette(3, 12, rng);
        double vvv = palette_lagrangian(p, StarMode::vvv).value;
        double ev = palette_lagrangian(p, StarMode::ev).value;
        double ee = palette_lagrangian(p, StarMode::ee).value;
        CHECK(ee <= ev + 1e-9);
        CHECK(ev <= vvv + 1e-9);
    }
}

TEST_CASE("p_t identity at the optimum")
{
    auto g = make_f32();
    double graph = lagrangian(g).value;
    for (int t : {1, 3, 6}) CHECK(palette_lagrangian(build_pt(g, t), StarMode::vvv).value == doctest::Approx(t / 6.0 * graph));
}
