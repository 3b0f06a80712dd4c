#pragma once

// Generators and brute-force oracles shared by the unit and acceptance tests.

#include <turan/colouring.hpp>
#include <turan/hypergraph.hpp>
#include <turan/palette.hpp>
#include <turan/rng.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

namespace turan::testing {

inline Hypergraph random_graph(int k, int n, double p, Rng &rng)
{
    std::vector<std::vector<Vertex>> edges;
    for (const auto &e : complete_hypergraph(k, n).edge_list())
        if (rng.bernoulli(p)) edges.push_back(e);
    return Hypergraph(k, n, edges);
}

inline Palette random_palette(int colours, int max_triples, Rng &rng)
{
    std::vector<ColourTriple> all;
    for (int a = 0; a < colours; ++a)
        for (int b = 0; b < colours; ++b)
            for (int c = 0; c < colours; ++c) all.push_back({a, b, c});
    int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min<int>(max_triples, all.size()))));
    for (std::size_t i = all.size() - 1; i > 0; --i) std::swap(all[i], all[rng.below(i + 1)]);
    all.resize(static_cast<std::size_t>(count));
    return Palette(all);
}

/// Fewest edges whose shadow misses the palette, over every ordering and
/// every colouring of the pairs by colours of the palette.
inline std::size_t brute_force_violations(const Hypergraph &graph, const Palette &palette)
{
    int n = graph.order();
    const auto &colours = palette.colours();
    std::size_t best = graph.size();
    if (colours.empty()) return best;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
    std::vector<Vertex> ordering(static_cast<std::size_t>(n));
    std::iota(ordering.begin(), ordering.end(), 1);
    do {
        std::vector<int> position(static_cast<std::size_t>(n + 1));
        for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(ordering[static_cast<std::size_t>(i)])] = i;
        std::vector<std::size_t> digits(pairs.size(), 0);
        while (true) {
            PairColouring c(n);
            for (std::size_t p = 0; p < pairs.size(); ++p) c.set(pairs[p].first, pairs[p].second, colours[digits[p]]);
            std::size_t bad = 0;
            for (std::size_t e = 0; e < graph.size(); ++e) {
                std::vector<Vertex> v(graph.edge(e).begin(), graph.edge(e).end());
                std::sort(v.begin(), v.end(), [&](Vertex a, Vertex b) {
                    return position[static_cast<std::size_t>(a)] < position[static_cast<std::size_t>(b)];
                });
                if (!palette.contains({c(v[0], v[1]), c(v[1], v[2]), c(v[0], v[2])})) ++bad;
            }
            best = std::min(best, bad);
            std::size_t p = 0;
            while (p < digits.size() && ++digits[p] == colours.size()) digits[p++] = 0;
            if (p == digits.size()) break;
        }
    } while (std::next_permutation(ordering.begin(), ordering.end()));
    return best;
}

} // namespace turan::testing
