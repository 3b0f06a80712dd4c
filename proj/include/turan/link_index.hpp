#pragma once

#include <turan/hypergraph.hpp>

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace turan {

/// Bitset over the vertices 1..n.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_(static_cast<std::size_t>(n + 64) / 64, 0) {}
    VertexSet(int n, std::span<const Vertex> members);

    int universe() const { return n_; }
    void insert(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
    bool contains(Vertex v) const { return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1; }
    std::size_t size() const;
    std::vector<Vertex> members() const;
    std::span<const std::uint64_t> words() const { return words_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// For every pair {u,v} of a 3-graph, the set of vertices w with uvw an
/// edge, as a bitset; memory is about n^3/8 bytes.
class LinkIndex {
public:
    static constexpr int kMaxOrder = 512;

    /// Throws std::invalid_argument for non-3-graphs and std::length_error
    /// above kMaxOrder vertices.
    explicit LinkIndex(const Hypergraph &graph);

    int order() const { return n_; }

    std::span<const std::uint64_t> link(Vertex u, Vertex v) const
    {
        return {bits_.data() + slot(u, v) * words_, words_};
    }

    /// |link(u,v) ∩ set|.
    std::size_t common(Vertex u, Vertex v, const VertexSet &set) const
    {
        auto l = link(u, v);
        auto s = set.words();
        std::size_t total = 0;
        for (std::size_t i = 0; i < words_; ++i) total += static_cast<std::size_t>(std::popcount(l[i] & s[i]));
        return total;
    }

private:
    std::size_t slot(Vertex u, Vertex v) const
    {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(v);
    }

    int n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

} // namespace turan
