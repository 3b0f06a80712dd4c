#include "support.hpp"

#include <turan/construction.hpp>
#include <turan/density.hpp>
#include <turan/link_index.hpp>
#include <turan/palette_lagrangian.hpp>
#include <turan/satisfaction.hpp>

#include <doctest.h>

#include <set>

using namespace turan;

namespace {

std::vector<Vertex> random_subset(int n, double p, Rng &rng)
{
    std::vector<Vertex> out;
    for (int v = 1; v <= n; ++v)
        if (rng.bernoulli(p)) out.push_back(v);
    return out;
}

std::vector<VertexPair> random_pairs(int n, double p, Rng &rng)
{
    std::vector<VertexPair> out;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.bernoulli(p)) out.push_back({u, v});
    return out;
}

bool edge(const Hypergraph &g, Vertex a, Vertex b, Vertex c)
{
    if (a == b || b == c || a == c) return false;
    return g.contains(std::vector<Vertex>{a, b, c});
}

} // namespace

TEST_CASE("construction satisfies its palette")
{
    auto p6 = build_pt(Hypergraph(3, 3, {{1, 2, 3}}), 6);
    Palette p2({{1, 2, 3}, {2, 2, 1}});
    for (const auto &p : {p6, p2}) {
        auto c = generate_construction(p, Weighting::uniform(p.colours()), 25, 4);
        CHECK(verify_certificate(c.hypergraph, p, c.certificate()));
        CHECK(shadow_hypergraph(p, c.ordering, c.colouring) == c.hypergraph);
    }
}

TEST_CASE("construction is determined by the seed")
{
    auto p = build_pt(Hypergraph(3, 3, {{1, 2, 3}}), 3);
    auto w = Weighting::uniform(p.colours());
    CHECK(generate_construction(p, w, 40, 8).hypergraph == generate_construction(p, w, 40, 8).hypergraph);
    CHECK_FALSE(generate_construction(p, w, 40, 8).hypergraph == generate_construction(p, w, 40, 9).hypergraph);
    CHECK_THROWS(generate_construction(p, w, 2, 1));
    CHECK(generate_construction(Palette{}, Weighting{}, 10, 1).hypergraph.size() == 0);
}

TEST_CASE("edge density tracks the vvv Lagrangian")
{
    Palette p({{1, 1, 2}, {1, 2, 2}, {2, 1, 1}});
    Weighting w({1, 2}, {0.7, 0.3});
    auto c = generate_construction(p, w, 150, 2);
    double density = static_cast<double>(c.hypergraph.size()) / (150.0 * 149 * 148 / 6);
    CHECK(density == doctest::Approx(lambda_vvv(p, w)).epsilon(0.1));
}

TEST_CASE("link index matches membership")
{
    Rng rng(41);
    auto g = testing::random_graph(3, 9, 0.4, rng);
    LinkIndex index(g);
    VertexSet all(9);
    for (Vertex v = 1; v <= 9; ++v) all.insert(v);
    for (Vertex u = 1; u <= 9; ++u)
        for (Vertex v = 1; v <= 9; ++v) {
            std::size_t expected = 0;
            for (Vertex w = 1; w <= 9; ++w) expected += edge(g, u, v, w);
            CHECK(index.common(u, v, all) == expected);
        }
    CHECK_THROWS(VertexSet(5, std::vector<Vertex>{6}));
}

TEST_CASE("counting functions match direct enumeration")
{
    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 8;
        auto g = testing::random_graph(3, n, 0.5, rng);
        auto x = random_subset(n, 0.5, rng), y = random_subset(n, 0.5, rng), z = random_subset(n, 0.5, rng);
        std::uint64_t vvv = 0;
        for (auto a : x)
            for (auto b : y)
                for (auto c : z) vvv += edge(g, a, b, c);
        CHECK(count_evvv(g, x, y, z) == vvv);

        auto pp = random_pairs(n, 0.4, rng), qq = random_pairs(n, 0.4, rng);
        std::uint64_t ev = 0;
        for (auto a : x)
            for (auto [u, v] : pp) ev += edge(g, a, u, v);
        CHECK(count_eev(g, x, pp) == ev);

        std::set<VertexPair> pset, qset;
        for (auto [u, v] : pp) pset.insert({u, v}), pset.insert({v, u});
        for (auto [u, v] : qq) qset.insert({u, v}), qset.insert({v, u});
        std::uint64_t hinged = 0, hits = 0;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int c = 1; c <= n; ++c)
                    if (pset.count({a, b}) && qset.count({b, c})) {
                        ++hinged;
                        hits += edge(g, a, b, c);
                    }
        auto ee = count_kee_and_eee(g, pp, qq);
        CHECK(ee.hinged == hinged);
        CHECK(ee.edges == hits);
    }
}

TEST_CASE("single-edge hinge count")
{
    Hypergraph g(3, 3, {{1, 2, 3}});
    auto ee = count_kee_and_eee(g, {{1, 2}}, {{2, 3}});
    CHECK(ee.hinged == 1);
    CHECK(ee.edges == 1);
}

TEST_CASE("colour triangles")
{
    PairColouring c(6);
    std::vector<Vertex> v1{1, 2}, v2{3, 4}, v3{5, 6};
    for (auto a : v1)
        for (auto b : v2) c.set(a, b, 0);
    for (auto b : v2)
        for (auto d : v3) c.set(b, d, 1);
    for (auto a : v1)
        for (auto d : v3) c.set(a, d, a == 1 ? 2 : 0);
    CHECK(count_colour_triangles(c, v1, v2, v3, 0, 1, 2) == 4);
    CHECK(count_colour_triangles(c, v1, v2, v3, 0, 1, 0) == 4);
    CHECK(count_colour_triangles(c, v1, v2, v3, 1, 1, 1) == 0);
    CHECK_THROWS(count_colour_triangles(c, v1, v1, v3, 0, 1, 2));
}

TEST_CASE("exhaustive audit equals brute force")
{
    Rng rng(43);
    for (int trial = 0; trial < 4; ++trial) {
        int n = 5;
        auto g = testing::random_graph(3, n, 0.6, rng);
        AuditConfig config;
        config.mode = AuditMode::exhaustive;
        // vvv: minimise e(X,Y,Z) / |X||Y||Z| over non-empty subsets.
        double best = 1.0;
        std::vector<std::vector<Vertex>> subsets;
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<Vertex> s;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) s.push_back(v + 1);
            subsets.push_back(s);
        }
        for (const auto &x : subsets)
            for (const auto &y : subsets)
                for (const auto &z : subsets)
                    best = std::min(best, static_cast<double>(count_evvv(g, x, y, z)) /
                                              static_cast<double>(x.size() * y.size() * z.size()));
        auto a = audit_density(g, StarMode::vvv, config);
        CHECK(a.d_estimate == doctest::Approx(best).epsilon(1e-12));
        REQUIRE(a.witness);
        CHECK(recount_witness(g, StarMode::vvv, 0.0, *a.witness) == doctest::Approx(a.d_estimate));
    }
}

TEST_CASE("audit bounds and limits")
{
    CHECK(witness_bound(3, 6, 0.0, 10) == doctest::Approx(0.5));
    CHECK(witness_bound(3, 6, 0.1, 10) == doctest::Approx(103.0 / 6));
    CHECK(audit_density(Hypergraph(3, 6, {}), StarMode::vvv, {}).d_estimate == 0.0);
    AuditConfig exhaustive;
    exhaustive.mode = AuditMode::exhaustive;
    CHECK_THROWS(audit_density(complete_hypergraph(3, 13), StarMode::vvv, exhaustive));
    CHECK_THROWS(audit_density(complete_hypergraph(3, 8), StarMode::ee, exhaustive));
    CHECK(audit_density(complete_hypergraph(3, 6), StarMode::ee, exhaustive).d_estimate == 0.0);
}

TEST_CASE("sampled audit is reproducible and recounts")
{
    auto p6 = build_pt(Hypergraph(3, 3, {{1, 2, 3}}), 6);
    auto c = generate_construction(p6, Weighting::uniform(p6.colours()), 60, 3);
    AuditConfig config;
    config.samples = 500;
    config.eta = 0.01;
    for (auto star : {StarMode::vvv, StarMode::ev, StarMode::ee}) {
        auto a = audit_density(c.hypergraph, star, config);
        auto b = audit_density(c.hypergraph, star, config);
        CHECK(a.d_estimate == b.d_estimate);
        REQUIRE(a.witness);
        CHECK(recount_witness(c.hypergraph, star, config.eta, *a.witness) == doctest::Approx(a.d_estimate));
    }
}
