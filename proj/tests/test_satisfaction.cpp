#include "support.hpp"

#include <turan/palette_lagrangian.hpp>
#include <turan/satisfaction.hpp>
#include <turan/text_io.hpp>

#include <doctest.h>

using namespace turan;

TEST_CASE("pair colouring storage")
{
    PairColouring c(4);
    CHECK(c(1, 2) == PairColouring::kUncoloured);
    c.set(3, 1, 7);
    CHECK(c(1, 3) == 7);
    CHECK(c(3, 1) == 7);
    CHECK_THROWS_AS(c.set(2, 2, 1), std::out_of_range);
    CHECK_THROWS_AS(c(0, 1), std::out_of_range);
    CHECK_THROWS_AS(c(1, 5), std::out_of_range);
}

TEST_CASE("decision agrees with exhaustive enumeration")
{
    Rng rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 3 + static_cast<int>(rng.below(2));
        auto g = testing::random_graph(3, n, 0.6, rng);
        auto p = testing::random_palette(2, 4, rng);
        auto r = satisfies(g, p);
        bool expected = testing::brute_force_violations(g, p) == 0;
        REQUIRE(r.verdict != Verdict::indeterminate);
        CHECK((r.verdict == Verdict::satisfied) == expected);
        if (r.certificate) CHECK(verify_certificate(g, p, *r.certificate));
    }
}

TEST_CASE("deletion distance agrees with exhaustive enumeration")
{
    Rng rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(rng.below(2));
        auto g = testing::random_graph(3, n, 0.7, rng);
        auto p = testing::random_palette(2, 3, rng);
        auto r = almost_satisfies_distance(g, p);
        CHECK(r.optimal);
        CHECK(r.deletions == testing::brute_force_violations(g, p));
    }
}

TEST_CASE("graphs satisfy their own p_t palettes")
{
    for (int t = 1; t <= 6; ++t) {
        auto f = make_f32();
        auto r = satisfies(f, build_pt(f, t));
        CHECK(r.verdict == Verdict::satisfied);
        REQUIRE(r.certificate);
        CHECK(verify_certificate(f, build_pt(f, t), *r.certificate));
    }
}

TEST_CASE("edge cases of the decision")
{
    Palette p({{0, 0, 0}});
    CHECK(satisfies(Hypergraph(3, 5, {}), p).verdict == Verdict::satisfied);
    CHECK(satisfies(Hypergraph(3, 5, {}), Palette{}).verdict == Verdict::satisfied);
    CHECK(satisfies(Hypergraph(3, 3, {{1, 2, 3}}), Palette{}).verdict == Verdict::not_satisfied);
    SatisfactionBudget small;
    small.max_n = 4;
    CHECK(satisfies(complete_hypergraph(3, 5), p, small).verdict == Verdict::indeterminate);
    // K4 against one ordered edge colour pattern.
    Palette rainbow({{1, 2, 3}});
    CHECK(satisfies(complete_hypergraph(3, 4), rainbow).verdict == Verdict::not_satisfied);
    CHECK(almost_satisfies_distance(complete_hypergraph(3, 4), rainbow).deletions == 2);
}

TEST_CASE("certificate verification rejects bad certificates")
{
    Hypergraph g(3, 3, {{1, 2, 3}});
    Palette p({{1, 2, 3}});
    PairColouring c(3);
    c.set(1, 2, 1);
    c.set(2, 3, 2);
    c.set(1, 3, 3);
    CHECK(verify_certificate(g, p, {{1, 2, 3}, c}));
    CHECK_FALSE(verify_certificate(g, p, {{2, 1, 3}, c}));
    CHECK_THROWS_AS(verify_certificate(g, p, {{1, 2}, c}), CertificateMismatch);
    CHECK_THROWS_AS(verify_certificate(g, p, {{1, 1, 3}, c}), CertificateMismatch);
}

TEST_CASE("certificate text round-trip")
{
    auto f = make_f32();
    auto r = satisfies(f, build_pt(f, 2));
    REQUIRE(r.certificate);
    auto text = serialize_certificate(*r.certificate);
    auto back = parse_certificate(text);
    CHECK(back.ordering == r.certificate->ordering);
    CHECK(back.colouring == r.certificate->colouring);
    CHECK_THROWS_AS(parse_certificate("1 2 3\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_certificate(""), ParseError);
}
