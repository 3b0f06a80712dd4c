#include <turan/construction.hpp>
#include <turan/palette_lagrangian.hpp>
#include <turan/rng.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace turan {

namespace {

std::vector<bool> membership(int n, const std::vector<Vertex> &set, const char *name)
{
    std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
    for (Vertex v : set) {
        if (v < 1 || v > n)
            throw std::out_of_range(std::string(name) + ": vertex " + std::to_string(v) + " outside 1.." +
                                    std::to_string(n));
        in[static_cast<std::size_t>(v)] = true;
    }
    return in;
}

/// Symmetric (n+1)^2 adjacency flags of a pair set.
std::vector<bool> pair_membership(int n, const std::vector<VertexPair> &pairs, const char *name)
{
    auto side = static_cast<std::size_t>(n) + 1;
    std::vector<bool> in(side * side, false);
    for (auto [u, v] : pairs) {
        if (u < 1 || v < 1 || u > n || v > n || u == v)
            throw std::out_of_range(std::string(name) + ": {" + std::to_string(u) + "," + std::to_string(v) +
                                    "} is not a pair of 1.." + std::to_string(n));
        in[static_cast<std::size_t>(u) * side + static_cast<std::size_t>(v)] = true;
        in[static_cast<std::size_t>(v) * side + static_cast<std::size_t>(u)] = true;
    }
    return in;
}

void require_three_uniform(const Hypergraph &graph)
{
    if (graph.uniformity() != 3) throw std::invalid_argument("counting is defined for 3-graphs");
}

constexpr std::array<std::array<int, 3>, 6> kPermutations{
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

} // namespace

PaletteConstruction generate_construction(const Palette &palette, const Weighting &weights, int n,
                                          std::uint64_t seed)
{
    if (n < 3) throw std::invalid_argument("construction needs n >= 3, got " + std::to_string(n));
    PaletteConstruction out;
    out.seed = seed;
    out.weighting = weights;
    out.ordering.resize(static_cast<std::size_t>(n));
    std::iota(out.ordering.begin(), out.ordering.end(), 1);

    if (palette.empty()) {
        if (!weights.empty()) throw std::invalid_argument("weights given for an empty palette");
        out.colouring = PairColouring(n);
        out.hypergraph = Hypergraph(3, n, {});
        return out;
    }

    auto x = colour_weights(palette, weights);
    std::vector<double> cumulative(x.size());
    std::partial_sum(x.begin(), x.end(), cumulative.begin());
    // The last colour of positive weight absorbs the rounding gap of the sum.
    std::size_t last = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > 0.0) last = i;

    Rng rng(seed);
    out.colouring = PairColouring(n);
    for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i + 1; j <= n; ++j) {
            double u = rng.uniform();
            std::size_t c = 0;
            while (c < last && (u >= cumulative[c] || x[c] == 0.0)) ++c;
            out.colouring.set(i, j, palette.colours()[c]);
        }
    out.hypergraph = shadow_hypergraph(palette, out.ordering, out.colouring);
    return out;
}

Hypergraph shadow_hypergraph(const Palette &palette, const std::vector<Vertex> &ordering,
                             const PairColouring &colouring)
{
    int n = colouring.order();
    if (static_cast<int>(ordering.size()) != n) throw std::invalid_argument("ordering and colouring sizes differ");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (Vertex v : ordering) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("ordering is not a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(v)] = true;
    }
    if (palette.empty()) return Hypergraph(3, n, {});

    TripleTable table(palette);
    // Dense colour of each pair; -1 for colours outside the palette.
    auto dense = [&](Vertex u, Vertex v) {
        auto idx = palette.index_of(colouring(u, v));
        return idx ? *idx : -1;
    };
    std::vector<std::vector<Vertex>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vertex a = ordering[static_cast<std::size_t>(i)], b = ordering[static_cast<std::size_t>(j)];
            int ab = dense(a, b);
            if (ab < 0) continue;
            for (int k = j + 1; k < n; ++k) {
                Vertex c = ordering[static_cast<std::size_t>(k)];
                int bc = dense(b, c), ac = dense(a, c);
                if (bc >= 0 && ac >= 0 && table(ab, bc, ac)) edges.push_back({a, b, c});
            }
        }
    return Hypergraph(3, n, std::move(edges));
}

std::uint64_t count_evvv(const Hypergraph &graph, const std::vector<Vertex> &x, const std::vector<Vertex> &y,
                         const std::vector<Vertex> &z)
{
    require_three_uniform(graph);
    int n = graph.order();
    auto in_x = membership(n, x, "X"), in_y = membership(n, y, "Y"), in_z = membership(n, z, "Z");
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < graph.size(); ++i) {
        auto e = graph.edge(i);
        for (const auto &p : kPermutations)
            total += in_x[static_cast<std::size_t>(e[static_cast<std::size_t>(p[0])])] &&
                     in_y[static_cast<std::size_t>(e[static_cast<std::size_t>(p[1])])] &&
                     in_z[static_cast<std::size_t>(e[static_cast<std::size_t>(p[2])])];
    }
    return total;
}

std::uint64_t count_eev(const Hypergraph &graph, const std::vector<Vertex> &x, const std::vector<VertexPair> &pairs)
{
    require_three_uniform(graph);
    int n = graph.order();
    auto in_x = membership(n, x, "X");
    auto in_p = pair_membership(n, pairs, "P");
    auto side = static_cast<std::size_t>(n) + 1;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < graph.size(); ++i) {
        auto e = graph.edge(i);
        for (int apex = 0; apex < 3; ++apex) {
            auto u = static_cast<std::size_t>(e[static_cast<std::size_t>((apex + 1) % 3)]);
            auto v = static_cast<std::size_t>(e[static_cast<std::size_t>((apex + 2) % 3)]);
            total += in_x[static_cast<std::size_t>(e[static_cast<std::size_t>(apex)])] && in_p[u * side + v];
        }
    }
    return total;
}

EeCounts count_kee_and_eee(const Hypergraph &graph, const std::vector<VertexPair> &p,
                           const std::vector<VertexPair> &q)
{
    require_three_uniform(graph);
    int n = graph.order();
    auto in_p = pair_membership(n, p, "P"), in_q = pair_membership(n, q, "Q");
    auto side = static_cast<std::size_t>(n) + 1;

    EeCounts out;
    for (std::size_t y = 1; y < side; ++y) {
        std::uint64_t dp = 0, dq = 0;
        for (std::size_t w = 1; w < side; ++w) {
            dp += in_p[y * side + w];
            dq += in_q[y * side + w];
        }
        out.hinged += dp * dq;
    }
    for (std::size_t i = 0; i < graph.size(); ++i) {
        auto e = graph.edge(i);
        for (const auto &perm : kPermutations) {
            auto a = static_cast<std::size_t>(e[static_cast<std::size_t>(perm[0])]);
            auto b = static_cast<std::size_t>(e[static_cast<std::size_t>(perm[1])]);
            auto c = static_cast<std::size_t>(e[static_cast<std::size_t>(perm[2])]);
            out.edges += in_p[a * side + b] && in_q[b * side + c];
        }
    }
    return out;
}

std::uint64_t count_colour_triangles(const PairColouring &colouring, const std::vector<Vertex> &v1,
                                     const std::vector<Vertex> &v2, const std::vector<Vertex> &v3, Colour a,
                                     Colour b, Colour c)
{
    int n = colouring.order();
    auto in1 = membership(n, v1, "V1"), in2 = membership(n, v2, "V2"), in3 = membership(n, v3, "V3");
    for (Vertex v = 1; v <= n; ++v)
        if (in1[static_cast<std::size_t>(v)] + in2[static_cast<std::size_t>(v)] + in3[static_cast<std::size_t>(v)] > 1)
            throw std::invalid_argument("vertex classes are not disjoint (vertex " + std::to_string(v) + ")");
    auto unique = [](std::vector<Vertex> s) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    };
    auto s1 = unique(v1), s2 = unique(v2), s3 = unique(v3);

    std::uint64_t total = 0;
    for (Vertex x : s1)
        for (Vertex y : s2) {
            if (colouring(x, y) != a) continue;
            for (Vertex z : s3) total += colouring(y, z) == b && colouring(x, z) == c;
        }
    return total;
}

} // namespace turan
