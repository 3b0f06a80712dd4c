#pragma once

#include <turan/colouring.hpp>
#include <turan/hypergraph.hpp>
#include <turan/palette.hpp>
#include <turan/satisfaction.hpp>
#include <turan/weighting.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace turan {

using VertexPair = std::pair<Vertex, Vertex>;

/// Random 3-graph built from a palette: pairs coloured independently, a
/// triple i<j<k kept when (c(ij), c(jk), c(ik)) is a palette triple.
struct PaletteConstruction {
    Hypergraph hypergraph;
    std::vector<Vertex> ordering;
    PairColouring colouring;
    Weighting weighting;
    std::uint64_t seed = 0;

    SatisfactionCertificate certificate() const { return {ordering, colouring}; }
};

/// Pairs are coloured in lexicographic order, each with one draw from
/// Rng(seed) against the cumulative weights. `weights` must be indexed by
/// the palette's colour set.
PaletteConstruction generate_construction(const Palette &palette, const Weighting &weights, int n,
                                          std::uint64_t seed);

/// The triples whose ordered colour shadow under (ordering, colouring) lies
/// in the palette.
Hypergraph shadow_hypergraph(const Palette &palette, const std::vector<Vertex> &ordering,
                             const PairColouring &colouring);

// Exact counts by direct iteration over the edges. Vertex and pair lists are
// read as sets; repeats are ignored.

/// Ordered triples (x,y,z) in X×Y×Z whose vertex set is an edge.
std::uint64_t count_evvv(const Hypergraph &graph, const std::vector<Vertex> &x, const std::vector<Vertex> &y,
                         const std::vector<Vertex> &z);

/// Triples (x, {y,z}) with x in X, {y,z} in the pair set and xyz an edge;
/// each unordered pair contributes once.
std::uint64_t count_eev(const Hypergraph &graph, const std::vector<Vertex> &x, const std::vector<VertexPair> &pairs);

struct EeCounts {
    /// Triples (x,y,z) with xy in P and yz in Q, including x = z.
    std::uint64_t hinged = 0;
    /// Those among them whose vertex set is an edge.
    std::uint64_t edges = 0;
};

EeCounts count_kee_and_eee(const Hypergraph &graph, const std::vector<VertexPair> &p,
                           const std::vector<VertexPair> &q);

/// Transversal triangles x∈V1, y∈V2, z∈V3 with c(xy)=a, c(yz)=b, c(xz)=c.
/// The classes must be disjoint and the pairs between them coloured.
std::uint64_t count_colour_triangles(const PairColouring &colouring, const std::vector<Vertex> &v1,
                                     const std::vector<Vertex> &v2, const std::vector<Vertex> &v3, Colour a,
                                     Colour b, Colour c);

} // namespace turan
