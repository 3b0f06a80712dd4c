#include <turan/link_index.hpp>

#include <stdexcept>
#include <string>

namespace turan {

VertexSet::VertexSet(int n, std::span<const Vertex> members) : VertexSet(n)
{
    for (Vertex v : members) {
        if (v < 1 || v > n) throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
        insert(v);
    }
}

std::size_t VertexSet::size() const
{
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= n_; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

LinkIndex::LinkIndex(const Hypergraph &graph) : n_(graph.order()), words_(static_cast<std::size_t>(n_ + 64) / 64)
{
    if (graph.uniformity() != 3) throw std::invalid_argument("link index needs a 3-graph");
    if (n_ > kMaxOrder)
        throw std::length_error("link index limited to " + std::to_string(kMaxOrder) + " vertices, graph has " +
                                std::to_string(n_));
    auto side = static_cast<std::size_t>(n_ + 1);
    bits_.assign(side * side * words_, 0);
    auto add = [&](Vertex u, Vertex v, Vertex w) {
        bits_[slot(u, v) * words_ + (static_cast<std::size_t>(w) >> 6)] |= std::uint64_t{1} << (w & 63);
    };
    for (std::size_t i = 0; i < graph.size(); ++i) {
        auto e = graph.edge(i);
        Vertex a = e[0], b = e[1], c = e[2];
        add(a, b, c), add(b, a, c);
        add(a, c, b), add(c, a, b);
        add(b, c, a), add(c, b, a);
    }
}

} // namespace turan
