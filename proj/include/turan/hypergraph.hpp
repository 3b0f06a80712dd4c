#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace turan {

using Vertex = int;

/// A k-uniform hypergraph on the vertex set {1, ..., n}.
///
/// Edges are stored sorted (each edge in increasing vertex order, the edge
/// list in lexicographic order), so two hypergraphs with the same edge set
/// compare equal and serialize identically. Construction rejects repeated
/// vertices, out-of-range vertices and duplicate edges.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int k, int n, std::vector<std::vector<Vertex>> edges);

    int uniformity() const { return k_; }
    int order() const { return n_; }
    std::size_t size() const { return k_ == 0 ? 0 : flat_.size() / static_cast<std::size_t>(k_); }
    bool empty() const { return flat_.empty(); }

    std::span<const Vertex> edge(std::size_t i) const
    {
        return {flat_.data() + i * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
    }

    /// Membership test; `vertices` need not be sorted.
    bool contains(std::span<const Vertex> vertices) const;

    std::vector<std::vector<Vertex>> edge_list() const;

    /// Number of edges containing each vertex, indexed 1..n (slot 0 unused).
    std::vector<int> degrees() const;

    bool operator==(const Hypergraph &) const = default;

private:
    int k_ = 3;
    int n_ = 0;
    std::vector<Vertex> flat_;
};

/// 3-uniform tight cycle on `length` vertices: edges {i, i+1, i+2} mod length.
/// The windows collapse for length 3 (one edge) and 4 (all four triples).
Hypergraph tight_cycle(int length);

/// All k-subsets of {1..n}.
Hypergraph complete_hypergraph(int k, int n);

/// F_{3,2}: vertices 1..5, edges 123, 145, 245, 345.
Hypergraph make_f32();

/// Sub-hypergraph keeping the edges whose index is flagged in `keep`.
Hypergraph with_edges(const Hypergraph &graph, const std::vector<bool> &keep);

} // namespace turan
