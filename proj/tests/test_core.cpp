#include "support.hpp"

#include <turan/palette.hpp>
#include <turan/simplex.hpp>
#include <turan/text_io.hpp>
#include <turan/weighting.hpp>

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace turan;

TEST_CASE("hypergraph edges are canonicalised")
{
    Hypergraph a(3, 4, {{3, 1, 2}, {4, 2, 1}});
    Hypergraph b(3, 4, {{1, 2, 4}, {1, 2, 3}});
    CHECK(a == b);
    CHECK(a.edge_list() == std::vector<std::vector<Vertex>>{{1, 2, 3}, {1, 2, 4}});
    CHECK(a.contains(std::vector<Vertex>{2, 1, 3}));
    CHECK_FALSE(a.contains(std::vector<Vertex>{1, 3, 4}));
    CHECK(a.degrees() == std::vector<int>{0, 2, 2, 1, 1});
}

TEST_CASE("hypergraph rejects malformed edges")
{
    CHECK_THROWS_AS(Hypergraph(3, 4, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 4, {{1, 2, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 4, {{1, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 4, {{1, 2, 3}, {3, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(0, 4, {}), std::invalid_argument);
}

TEST_CASE("named hypergraphs")
{
    CHECK(tight_cycle(3).size() == 1);
    CHECK(tight_cycle(4) == complete_hypergraph(3, 4));
    CHECK(tight_cycle(7).size() == 7);
    CHECK(complete_hypergraph(3, 6).size() == 20);
    CHECK(make_f32().edge_list() == std::vector<std::vector<Vertex>>{{1, 2, 3}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5}});
}

TEST_CASE("palette colour set is the union of triple entries")
{
    Palette p({{5, 1, 1}, {1, 2, 5}});
    CHECK(p.size() == 2);
    CHECK(p.colours() == std::vector<Colour>{1, 2, 5});
    CHECK(p.contains({1, 2, 5}));
    CHECK_FALSE(p.contains({2, 1, 5}));
    CHECK(*p.index_of(5) == 2);
    CHECK_FALSE(p.index_of(3).has_value());
    CHECK_THROWS_AS(Palette({{-1, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Palette({{1, 2, 5}, {1, 2, 5}}), std::invalid_argument);
}

TEST_CASE("weighting validation")
{
    Weighting w({3, 1}, {0.25, 0.75});
    CHECK(w.weight_of(1) == doctest::Approx(0.75));
    CHECK(w.weight_of(7) == 0.0);
    CHECK_THROWS_AS(Weighting({1, 2}, {0.5, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(Weighting({1, 2}, {1.5, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(Weighting({1, 1}, {0.5, 0.5}), std::invalid_argument);
    CHECK(Weighting::over_vertices({0.5, 0.5}).labels()[1] == 2);
    CHECK(parse_star_mode("ee") == StarMode::ee);
    CHECK_THROWS(parse_star_mode("vv"));
}

TEST_CASE("text formats round-trip")
{
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = testing::random_graph(3, 6, 0.4, rng);
        CHECK(parse_hypergraph(serialize_hypergraph(g)) == g);
        auto p = testing::random_palette(3, 8, rng);
        CHECK(parse_palette(serialize_palette(p)) == p);
    }
    auto g = parse_hypergraph("# comment\n3 5\n\n5 4 3\n# another\n1 2 3\n");
    CHECK(g.size() == 2);
    CHECK(g.edge_list().front() == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("parse errors carry the line number")
{
    try {
        parse_hypergraph("3 4\n1 2 3\n1 2 x\n");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_hypergraph("3 4\n1 2 9\n"), ParseError);
    CHECK_THROWS_AS(parse_palette("1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph(""), ParseError);
}

TEST_CASE("simplex projection matches the KKT characterisation")
{
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> y(5);
        for (auto &v : y) v = 4.0 * rng.uniform() - 2.0;
        auto x = project_to_simplex(y);
        CHECK(std::accumulate(x.begin(), x.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
        // x = max(y - tau, 0) for one threshold tau.
        double tau = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i)
            if (x[i] > 0) tau = y[i] - x[i];
        for (std::size_t i = 0; i < y.size(); ++i) CHECK(x[i] == doctest::Approx(std::max(y[i] - tau, 0.0)));
    }
}

TEST_CASE("composition enumeration")
{
    CHECK(composition_count(15, 5) == 3876);
    std::uint64_t seen = 0;
    for_each_composition(6, 3, [&](std::span<const int> c) {
        CHECK(c[0] + c[1] + c[2] == 6);
        ++seen;
    });
    CHECK(seen == composition_count(6, 3));
}

TEST_CASE("rng streams are reproducible")
{
    Rng a(42), b(42);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    CHECK(Rng(42).split(1).next() != Rng(42).split(2).next());
    auto x = random_simplex_point(4, a);
    CHECK(std::accumulate(x.begin(), x.end(), 0.0) == doctest::Approx(1.0));
}
